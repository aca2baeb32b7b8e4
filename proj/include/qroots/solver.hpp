#pragma once

#include <algorithm>
#include <cmath>
#include <variant>
#include <vector>

#include "qroots/croots.hpp"
#include "qroots/errors.hpp"
#include "qroots/powers.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/quaternion.hpp"

namespace qroots {

/// A single quaternion root point.
struct IsolatedRoot {
    Quaternion point;
    int multiplicity;

    bool operator==(const IsolatedRoot&) const = default;
};

/// A whole 2-sphere of roots {w : Sc(w) = x0, |Vec(w)| = r}, r > 0. A
/// zero-radius "sphere" is represented as an IsolatedRoot at the real
/// point x0 instead.
struct SphericalRoot {
    double x0;
    double r;
    int multiplicity;

    bool operator==(const SphericalRoot&) const = default;
};

using QuatRoot = std::variant<IsolatedRoot, SphericalRoot>;

/// Complete root set of a one-sided polynomial. The counting identity
///   zero_root_multiplicity + sum(isolated mult) + 2 * sum(spherical mult)
///     = degree
/// holds for every successfully solved input.
struct RootSet {
    std::vector<QuatRoot> roots;
    int zero_root_multiplicity{0};
    int degree{0};
};

/// The two quaternion sums of the reduced-power expansion of a polynomial
/// at (x0, rho): with w^m = q_m w - p_m rho,
///   R(w) = w_part * w - rho * norm_part + A_0   (right side),
/// and w_part = 0 is the criterion for (x0, r) to carry a spherical root.
struct CriterionSums {
    Quaternion w_part;     ///< sum_{m>=1} A_m q_m
    Quaternion norm_part;  ///< sum_{m>=1} A_m p_m
};

/// Both reduction sums at (x0, rho). The coefficients q_m, p_m are real,
/// so left polynomials produce the same values with mirrored products.
inline CriterionSums criterion_sums(const QuatPolynomial& poly, double x0,
                                    double rho) {
    const int n = poly.degree();
    CriterionSums out{};
    if (n < 1) return out;
    const auto red = power_reductions(n, x0, rho);
    for (int m = 1; m <= n; ++m) {
        out.w_part += poly.coeffs[static_cast<std::size_t>(m)] * red[m - 1].w_coeff;
        out.norm_part += poly.coeffs[static_cast<std::size_t>(m)] * red[m - 1].norm_coeff;
    }
    return out;
}

namespace detail {

inline double root_residual(const QuatPolynomial& poly, const Quaternion& w) {
    return eval(poly, w).modulus();
}

inline const Quaternion* probe_directions() {
    static const Quaternion dirs[4] = {
        Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k(),
        Quaternion{0.0, 1.0, 1.0, 1.0} / std::sqrt(3.0)};
    return dirs;
}

}  // namespace detail

/// Classifies one conjugate-pair cluster of the basic polynomial of a
/// normalized polynomial (constant coefficient nonzero).
///
/// Real clusters are isolated real points with half the cluster's
/// multiplicity (each conjugate-pair slot is one quaternion root; real
/// clusters of a basic polynomial carry an even count). Non-real clusters
/// are spherical when |w_part| vanishes relative to the coefficient
/// scale; otherwise the unique point with that scalar part and vector
/// norm is solved from w_part * w = rho * norm_part - A_0.
inline QuatRoot classify_cluster(const QuatPolynomial& poly,
                                 const ComplexRootCluster& cluster,
                                 const SolverConfig& cfg) {
    if (cluster.r <= cfg.real_axis_tol) {
        if (cluster.multiplicity % 2 != 0)
            throw ResidualTooLargeError(
                "real cluster with odd multiplicity from a basic polynomial",
                static_cast<double>(cluster.multiplicity), 0.0);
        const Quaternion point = Quaternion::real(cluster.x0);
        const double bound =
            cfg.residual_tol * coefficient_scale(poly, std::abs(cluster.x0));
        const double residual = detail::root_residual(poly, point);
        if (residual > bound)
            throw ResidualTooLargeError(
                "real root fails its defining equation", residual, bound);
        return IsolatedRoot{point, cluster.multiplicity / 2};
    }

    const double rho = cluster.x0 * cluster.x0 + cluster.r * cluster.r;
    const auto sums = criterion_sums(poly, cluster.x0, rho);
    const double criterion_scale =
        coefficient_scale(poly, std::sqrt(rho), /*from_degree=*/1);

    if (sums.w_part.modulus() <= cfg.sphericity_tol * criterion_scale) {
        if (cluster.multiplicity % 2 != 0)
            throw ResidualTooLargeError(
                "spherical cluster with odd multiplicity",
                static_cast<double>(cluster.multiplicity), 0.0);
        return SphericalRoot{cluster.x0, cluster.r, cluster.multiplicity / 2};
    }

    const Quaternion shift = rho * sums.norm_part - poly.coeffs.front();
    const Quaternion point = poly.side == Side::right
                                 ? inverse(sums.w_part) * shift
                                 : shift * inverse(sums.w_part);
    const double bound =
        cfg.residual_tol * coefficient_scale(poly, point.modulus());
    const double residual = detail::root_residual(poly, point);
    if (residual > bound)
        throw ResidualTooLargeError("isolated root fails its defining equation",
                                    residual, bound);
    return IsolatedRoot{point, cluster.multiplicity};
}

/// Per-solve details surfaced for reporting.
struct SolveDiagnostics {
    int iterations{0};
    RealPolynomial basic;
};

namespace detail {

inline RootSet solve_with(const QuatPolynomial& poly, const SolverConfig& cfg,
                          SolveDiagnostics* diagnostics) {
    const auto normalized = normalize(poly);
    const QuatPolynomial& reduced = normalized.poly;

    RootSet out;
    out.zero_root_multiplicity = normalized.zero_root_multiplicity;
    out.degree = reduced.degree() + normalized.zero_root_multiplicity;
    if (reduced.degree() == 0) return out;

    const RealPolynomial basic = basic_polynomial(reduced);
    if (diagnostics != nullptr) diagnostics->basic = basic;
    const auto clusters =
        find_roots(basic, cfg,
                   diagnostics != nullptr ? &diagnostics->iterations : nullptr);
    for (const auto& cluster : clusters)
        out.roots.push_back(classify_cluster(reduced, cluster, cfg));

    for (const auto& root : out.roots) {
        if (const auto* sphere = std::get_if<SphericalRoot>(&root)) {
            const double modulus =
                std::sqrt(sphere->x0 * sphere->x0 + sphere->r * sphere->r);
            const double bound =
                cfg.residual_tol * coefficient_scale(reduced, modulus);
            for (int d = 0; d < 4; ++d) {
                const Quaternion probe =
                    Quaternion::real(sphere->x0) +
                    sphere->r * detail::probe_directions()[d];
                const double residual = detail::root_residual(reduced, probe);
                if (residual > bound)
                    throw ResidualTooLargeError(
                        "spherical root fails a probe evaluation", residual,
                        bound);
            }
        }
    }
    return out;
}

}  // namespace detail

/// Solves a one-sided quaternionic polynomial: deflate zero roots, reduce
/// to the basic polynomial, find its conjugate-pair clusters, classify
/// each one, and verify every reported root by direct evaluation.
///
/// Distinct roots closer than the default cluster resolution can merge
/// into one cluster that then fails its residual gate; one retry at a
/// tighter clustering radius separates such merges. A failure of the
/// retry is surfaced unchanged.
inline RootSet solve(const QuatPolynomial& poly, const SolverConfig& cfg = {},
                     SolveDiagnostics* diagnostics = nullptr) {
    try {
        return detail::solve_with(poly, cfg, diagnostics);
    } catch (const ResidualTooLargeError&) {
        SolverConfig tighter = cfg;
        tighter.cluster_radius = std::pow(cfg.cluster_radius, 1.5);
        return detail::solve_with(poly, tighter, diagnostics);
    }
}

/// True when both w and conj(w) evaluate to zero within the residual
/// bound. A non-real w for which this holds must sit on a sphere of the
/// root set; finding it classified otherwise is an internal inconsistency.
inline bool conjugate_root_check(const QuatPolynomial& poly,
                                 const RootSet& rootset, const Quaternion& w,
                                 const SolverConfig& cfg = {}) {
    const auto normalized = normalize(poly);
    const QuatPolynomial& reduced = normalized.poly;
    const double bound =
        cfg.residual_tol * coefficient_scale(reduced, w.modulus());
    const bool both = detail::root_residual(reduced, w) <= bound &&
                      detail::root_residual(reduced, w.conj()) <= bound;
    if (!both) return false;

    if (w.vec_norm() > cfg.real_axis_tol) {
        const bool on_sphere = std::any_of(
            rootset.roots.begin(), rootset.roots.end(),
            [&](const QuatRoot& root) {
                const auto* sphere = std::get_if<SphericalRoot>(&root);
                return sphere != nullptr &&
                       std::abs(sphere->x0 - w.scalar_part()) <=
                           1e-6 * std::max(1.0, std::abs(sphere->x0)) &&
                       std::abs(sphere->r - w.vec_norm()) <=
                           1e-6 * std::max(1.0, sphere->r);
            });
        if (!on_sphere)
            throw ResidualTooLargeError(
                "w and conj(w) are both roots but no matching spherical root "
                "is reported",
                w.vec_norm(), cfg.real_axis_tol);
    }
    return true;
}

}  // namespace qroots
