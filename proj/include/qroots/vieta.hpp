#pragma once

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include "qroots/errors.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/quaternion.hpp"
#include "qroots/solver.hpp"

namespace qroots {

/// One Vieta-type identity evaluated on a root set: lhs from the roots,
/// rhs from the coefficients, residual = |lhs - rhs| / max(1, |rhs|).
struct IdentityCheck {
    double lhs;
    double rhs;
    double residual;
};

namespace detail {

inline IdentityCheck make_check(double lhs, double rhs) {
    return {lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs))};
}

}  // namespace detail

/// Expands a root set into one quaternion per counted root: each isolated
/// point repeated by its multiplicity, two canonical representatives
/// x0 +/- r*i per spherical root (identities below depend only on the
/// scalar part and modulus, both constant on a sphere), and zeros for the
/// deflated roots when requested.
inline std::vector<Quaternion> representatives(const RootSet& rootset,
                                               bool include_zero_roots = true) {
    std::vector<Quaternion> reps;
    if (include_zero_roots)
        reps.insert(reps.end(),
                    static_cast<std::size_t>(rootset.zero_root_multiplicity),
                    Quaternion{});
    for (const auto& root : rootset.roots) {
        if (const auto* iso = std::get_if<IsolatedRoot>(&root)) {
            reps.insert(reps.end(), static_cast<std::size_t>(iso->multiplicity),
                        iso->point);
        } else {
            const auto& sphere = std::get<SphericalRoot>(root);
            const Quaternion up{sphere.x0, sphere.r, 0.0, 0.0};
            const Quaternion down{sphere.x0, -sphere.r, 0.0, 0.0};
            for (int c = 0; c < sphere.multiplicity; ++c) {
                reps.push_back(up);
                reps.push_back(down);
            }
        }
    }
    return reps;
}

/// Product of root moduli against |A_0| / |A_n|.
inline IdentityCheck check_product_moduli(const QuatPolynomial& poly,
                                          const std::vector<Quaternion>& reps) {
    double lhs = 1.0;
    for (const auto& w : reps) lhs *= w.modulus();
    const double rhs =
        poly.coeffs.front().modulus() / poly.coeffs.back().modulus();
    return detail::make_check(lhs, rhs);
}

/// Sum of root scalar parts against -dot(A_n, A_{n-1}) / |A_n|^2.
inline IdentityCheck check_sum_scalars(const QuatPolynomial& poly,
                                       const std::vector<Quaternion>& reps) {
    double lhs = 0.0;
    for (const auto& w : reps) lhs += w.scalar_part();
    double rhs = 0.0;
    const std::size_t n = poly.coeffs.size() - 1;
    if (n >= 1)
        rhs = -dot(poly.coeffs[n], poly.coeffs[n - 1]) /
              poly.coeffs[n].modulus_sq();
    return detail::make_check(lhs, rhs);
}

/// Sum of Sc(w)/|w|^2 over the roots against -dot(A_1, A_0) / |A_0|^2.
/// Defined only when the constant coefficient is nonzero, which also
/// guarantees no root has zero modulus.
inline IdentityCheck check_sum_sc_over_modsq(const QuatPolynomial& poly,
                                             const std::vector<Quaternion>& reps) {
    if (poly.coeffs.front().is_zero())
        throw PreconditionError(
            "reciprocal scalar sum needs a nonzero constant coefficient");
    double lhs = 0.0;
    for (const auto& w : reps) lhs += w.scalar_part() / w.modulus_sq();
    double rhs = 0.0;
    if (poly.coeffs.size() >= 2)
        rhs = -dot(poly.coeffs[1], poly.coeffs[0]) /
              poly.coeffs[0].modulus_sq();
    return detail::make_check(lhs, rhs);
}

/// When every root is a pure vector, both dot(A_n, A_{n-1}) and
/// dot(A_1, A_0) must vanish.
struct PureVectorCheck {
    bool applies;       ///< max |Sc(w)| over the roots is within tol
    double dot_top;     ///< dot(A_n, A_{n-1})
    double dot_bottom;  ///< dot(A_1, A_0), 0 for degree < 1
};

inline PureVectorCheck check_pure_vector_dots(
    const QuatPolynomial& poly, const std::vector<Quaternion>& reps,
    double tol) {
    double max_sc = 0.0;
    for (const auto& w : reps) max_sc = std::max(max_sc, std::abs(w.scalar_part()));
    PureVectorCheck out{};
    out.applies = max_sc <= tol;
    const std::size_t n = poly.coeffs.size() - 1;
    out.dot_top = n >= 1 ? dot(poly.coeffs[n], poly.coeffs[n - 1]) : 0.0;
    out.dot_bottom = n >= 1 ? dot(poly.coeffs[1], poly.coeffs[0]) : 0.0;
    return out;
}

/// Residual report for the three Vieta-type identities. Checks run on the
/// deflated polynomial (zero roots excluded from the representatives and
/// reported separately); the reciprocal sum is absent when the original
/// polynomial had a zero constant coefficient.
struct VietaReport {
    IdentityCheck product_moduli;
    IdentityCheck sum_scalars;
    std::optional<IdentityCheck> sum_sc_over_modsq;
    PureVectorCheck pure_vector;
    int zero_root_multiplicity{0};
};

inline VietaReport make_vieta_report(const QuatPolynomial& poly,
                                     const RootSet& rootset,
                                     double pure_vector_tol = 1e-9) {
    const auto normalized = normalize(poly);
    const auto reps = representatives(rootset, /*include_zero_roots=*/false);
    VietaReport report{};
    report.zero_root_multiplicity = rootset.zero_root_multiplicity;
    report.product_moduli = check_product_moduli(normalized.poly, reps);
    report.sum_scalars = check_sum_scalars(normalized.poly, reps);
    if (normalized.zero_root_multiplicity == 0)
        report.sum_sc_over_modsq = check_sum_sc_over_modsq(normalized.poly, reps);
    report.pure_vector =
        check_pure_vector_dots(normalized.poly, reps, pure_vector_tol);
    return report;
}

}  // namespace qroots
