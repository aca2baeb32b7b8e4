#pragma once

#include <vector>

#include "qroots/errors.hpp"
#include "qroots/quaternion.hpp"

namespace qroots {

/// Real coefficients of the power reduction w^m = w_coeff * w - norm_coeff * |w|^2.
///
/// Both values are functions of (x0, rho) = (scalar part, squared modulus)
/// only, so they are constant on each sphere {Sc(w) = x0, |w|^2 = rho}.
struct PowerReduction {
    double w_coeff;     ///< multiplies w
    double norm_coeff;  ///< multiplies |w|^2
};

/// Reduction coefficients for all powers m = 1..n in one pass.
///
/// Base pair is (1, 0); for m >= 2,
///   w_coeff(m)    = 2*x0*w_coeff(m-1) - norm_coeff(m-1)*rho,
///   norm_coeff(m) = w_coeff(m-1).
/// The returned vector is indexed by m - 1.
inline std::vector<PowerReduction> power_reductions(int n, double x0, double rho) {
    if (n < 1) throw DomainError("power_reductions: n must be >= 1");
    if (rho < 0.0) throw DomainError("power_reductions: rho must be >= 0");
    std::vector<PowerReduction> out;
    out.reserve(static_cast<std::size_t>(n));
    out.push_back({1.0, 0.0});
    for (int m = 2; m <= n; ++m) {
        const PowerReduction& prev = out.back();
        out.push_back({2.0 * x0 * prev.w_coeff - prev.norm_coeff * rho, prev.w_coeff});
    }
    return out;
}

/// w^n through the reduction coefficients; n = 0 gives 1.
inline Quaternion power(const Quaternion& w, int n) {
    if (n < 0) throw DomainError("power: n must be >= 0");
    if (n == 0) return Quaternion::one();
    if (n == 1) return w;
    const double x0 = w.scalar_part();
    const double rho = w.modulus_sq();
    const auto red = power_reductions(n, x0, rho);
    const PowerReduction& top = red.back();
    return top.w_coeff * w - Quaternion::real(top.norm_coeff * rho);
}

}  // namespace qroots
