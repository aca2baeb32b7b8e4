#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qroots/errors.hpp"
#include "qroots/powers.hpp"
#include "qroots/quaternion.hpp"
#include "qroots/real_polynomial.hpp"

namespace qroots {

/// Coefficient placement of a one-sided polynomial: a right polynomial is
/// sum A_m w^m (coefficients left of the powers), a left polynomial is
/// sum w^m A_m.
enum class Side { right, left };

/// One-sided quaternionic polynomial, coefficients in ascending degree.
struct QuatPolynomial {
    std::vector<Quaternion> coeffs;
    Side side{Side::right};

    QuatPolynomial() = default;
    QuatPolynomial(std::vector<Quaternion> c, Side s = Side::right)
        : coeffs(std::move(c)), side(s) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(),
                           [](const Quaternion& a) { return a.is_zero(); });
    }

    bool operator==(const QuatPolynomial&) const = default;
};

/// Coefficientwise sum; sides must match.
inline QuatPolynomial operator+(const QuatPolynomial& p, const QuatPolynomial& q) {
    if (p.side != q.side) throw DomainError("polynomial sum: mismatched sides");
    QuatPolynomial out;
    out.side = p.side;
    out.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()));
    for (std::size_t m = 0; m < out.coeffs.size(); ++m) {
        if (m < p.coeffs.size()) out.coeffs[m] += p.coeffs[m];
        if (m < q.coeffs.size()) out.coeffs[m] += q.coeffs[m];
    }
    return out;
}

inline QuatPolynomial operator*(double c, const QuatPolynomial& p) {
    QuatPolynomial out = p;
    for (auto& a : out.coeffs) a *= c;
    return out;
}

/// Evaluates the polynomial at w through the power reduction
/// w^m = q_m w - p_m |w|^2, one coefficient pass per call.
inline Quaternion eval(const QuatPolynomial& poly, const Quaternion& w) {
    if (poly.coeffs.empty()) return {};
    Quaternion acc = poly.coeffs[0];
    const int n = poly.degree();
    if (n == 0) return acc;
    const double x0 = w.scalar_part();
    const double rho = w.modulus_sq();
    const auto red = power_reductions(n, x0, rho);
    for (int m = 1; m <= n; ++m) {
        const Quaternion wm = red[m - 1].w_coeff * w -
                              Quaternion::real(red[m - 1].norm_coeff * rho);
        acc += poly.side == Side::right ? poly.coeffs[m] * wm : wm * poly.coeffs[m];
    }
    return acc;
}

/// A polynomial with nonzero constant and leading coefficients, plus the
/// multiplicity of the stripped root at w = 0.
struct NormalizedPolynomial {
    QuatPolynomial poly;
    int zero_root_multiplicity;
};

/// Strips exactly-zero leading coefficients, then factors out w^k when the
/// k lowest coefficients vanish. Valid because w commutes with its own
/// powers: sum_{m>=k} A_m w^m = (sum A_{m+k} w^m) w^k.
inline NormalizedPolynomial normalize(const QuatPolynomial& poly) {
    if (poly.is_zero()) throw ZeroPolynomialError{};
    std::size_t hi = poly.coeffs.size();
    while (hi > 0 && poly.coeffs[hi - 1].is_zero()) --hi;
    std::size_t lo = 0;
    while (lo < hi && poly.coeffs[lo].is_zero()) ++lo;
    QuatPolynomial out;
    out.side = poly.side;
    out.coeffs.assign(poly.coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                      poly.coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
    return {std::move(out), static_cast<int>(lo)};
}

/// Coefficients sum_k conj(A_k) A_{m-k} (conj_first) or the mirrored
/// sum_k A_k conj(A_{m-k}), m = 0..2n, as quaternions.
inline std::vector<Quaternion> basic_quaternion_form(const QuatPolynomial& poly,
                                                     bool conj_first = true) {
    const int n = poly.degree();
    std::vector<Quaternion> out(static_cast<std::size_t>(2 * n + 1));
    for (int m = 0; m <= 2 * n; ++m) {
        Quaternion sum{};
        const int k_lo = std::max(0, m - n);
        const int k_hi = std::min(m, n);
        for (int k = k_lo; k <= k_hi; ++k) {
            const Quaternion& a = poly.coeffs[static_cast<std::size_t>(k)];
            const Quaternion& b = poly.coeffs[static_cast<std::size_t>(m - k)];
            sum += conj_first ? a.conj() * b : a * b.conj();
        }
        out[static_cast<std::size_t>(m)] = sum;
    }
    return out;
}

/// Basic polynomial of a normalized one-sided polynomial: the real
/// degree-2n polynomial with B_m = sum_k dot(A_k, A_{m-k}).
///
/// This equals the scalar part of sum_k conj(A_k) A_{m-k}, whose vector
/// part cancels pairwise; computing the real sum directly keeps the
/// coefficients exactly real. Identical for both sides.
inline RealPolynomial basic_polynomial(const QuatPolynomial& poly) {
    const int n = poly.degree();
    RealPolynomial out;
    out.coeffs.assign(static_cast<std::size_t>(2 * n + 1), 0.0);
    for (int m = 0; m <= 2 * n; ++m) {
        double sum = 0.0;
        const int k_lo = std::max(0, m - n);
        const int k_hi = std::min(m, n);
        for (int k = k_lo; k <= k_hi; ++k)
            sum += dot(poly.coeffs[static_cast<std::size_t>(k)],
                       poly.coeffs[static_cast<std::size_t>(m - k)]);
        out.coeffs[static_cast<std::size_t>(m)] = sum;
    }
    return out;
}

/// Maximum absolute component difference between the conj-first and
/// conj-second quaternion coefficient forms. Zero in exact arithmetic,
/// which is why right and left polynomials share one basic polynomial.
inline double basic_left_right_gap(const QuatPolynomial& poly) {
    const auto f = basic_quaternion_form(poly, true);
    const auto g = basic_quaternion_form(poly, false);
    double gap = 0.0;
    for (std::size_t m = 0; m < f.size(); ++m) {
        const Quaternion d = f[m] - g[m];
        gap = std::max({gap, std::abs(d.s), std::abs(d.x), std::abs(d.y),
                        std::abs(d.z)});
    }
    return gap;
}

/// sum_{m=from_degree}^{n} |A_m| * max(1, modulus)^m; the scale used by
/// relative residual and sphericity thresholds.
inline double coefficient_scale(const QuatPolynomial& poly, double modulus,
                                int from_degree = 0) {
    const double base = std::max(1.0, modulus);
    double scale = 0.0;
    double pw = 1.0;
    for (int m = 0; m <= poly.degree(); ++m) {
        if (m >= from_degree)
            scale += poly.coeffs[static_cast<std::size_t>(m)].modulus() * pw;
        pw *= base;
    }
    return scale;
}

}  // namespace qroots
