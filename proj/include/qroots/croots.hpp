#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "qroots/errors.hpp"
#include "qroots/prng.hpp"
#include "qroots/real_polynomial.hpp"

namespace qroots {

/// Tolerances and limits shared by the root finder and the classification
/// stage built on top of it. All tolerances must be positive.
struct SolverConfig {
    int max_iterations = 200;
    double convergence_tol = 1e-14;  ///< on the monic residual, relative to sum |b_m| |z|^m
    double cluster_radius = 1e-6;    ///< merge radius is cluster_radius^(1/m) for multiplicity m
    double real_axis_tol = 1e-9;     ///< |Im z| at or below this snaps to the real axis
    double sphericity_tol = 1e-8;    ///< relative threshold on the sphericity criterion sum
    double residual_tol = 1e-8;      ///< relative residual bound for reported roots
    std::uint64_t seed = 0;          ///< initial-guess jitter
};

/// Conjugate-pair group of roots of a real polynomial: x0 + i*r is a root
/// of multiplicity `multiplicity`, and for r > 0 so is x0 - i*r.
struct ComplexRootCluster {
    double x0;
    double r;
    int multiplicity;

    bool operator==(const ComplexRootCluster&) const = default;
};

namespace detail {

inline void eval_with_derivative(const std::vector<double>& c,
                                 std::complex<double> z,
                                 std::complex<double>& value,
                                 std::complex<double>& derivative) {
    std::complex<double> b = c.back();
    std::complex<double> d = 0.0;
    for (std::size_t m = c.size() - 1; m-- > 0;) {
        d = d * z + b;
        b = b * z + c[m];
    }
    value = b;
    derivative = d;
}

inline double magnitude_scale(const std::vector<double>& c, double abs_z) {
    double acc = 0.0;
    for (std::size_t m = c.size(); m-- > 0;) acc = acc * abs_z + std::abs(c[m]);
    return acc;
}

inline std::vector<double> monic_coefficients(const RealPolynomial& p) {
    std::vector<double> monic(p.coeffs);
    const double lead = monic.back();
    for (double& b : monic) b /= lead;
    return monic;
}

inline std::vector<double> derivative_coefficients(const std::vector<double>& c) {
    std::vector<double> d;
    d.reserve(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        d.push_back(c[k] * static_cast<double>(k));
    return d;
}

/// Refines a multiplicity-m cluster center. The center is a simple root of
/// the (m-1)-th derivative, where Newton converges quadratically; iterating
/// on the polynomial itself cannot do better than the epsilon^(1/m)
/// evaluation-noise floor. Falls back to the start when the iteration
/// drifts beyond the cluster resolution, which flags a merge of distinct
/// roots rather than a true multiple root. A real start stays exactly real.
inline std::complex<double> polish_root(const std::vector<double>& monic,
                                        std::complex<double> z, int multiplicity,
                                        double max_drift) {
    std::vector<double> c = monic;
    for (int i = 1; i < multiplicity; ++i) c = derivative_coefficients(c);
    if (c.size() < 2) return z;
    const std::complex<double> start = z;
    std::complex<double> value, derivative;
    eval_with_derivative(c, z, value, derivative);
    std::complex<double> best = z;
    double best_val = std::abs(value);
    for (int step = 0; step < 10; ++step) {
        if (derivative == 0.0) break;
        z -= value / derivative;
        eval_with_derivative(c, z, value, derivative);
        if (std::abs(value) < best_val) {
            best_val = std::abs(value);
            best = z;
        }
    }
    return std::abs(best - start) <= max_drift ? best : start;
}

}  // namespace detail

/// Simultaneous Aberth--Ehrlich iteration on the monic-normalized
/// polynomial. Returns the raw converged roots (no symmetry snapping);
/// exposed separately so the pre-snap multiset can be inspected.
///
/// Initial guesses sit on the Cauchy-bound circle 1 + max|b_m / b_n| with
/// seed-jittered angles. A root counts as converged once its residual
/// drops below convergence_tol relative to sum |b_m| |z|^m.
inline std::vector<std::complex<double>> aberth_roots(const RealPolynomial& p,
                                                      const SolverConfig& cfg,
                                                      int* iterations_out = nullptr) {
    if (cfg.convergence_tol <= 0.0 || cfg.cluster_radius <= 0.0 ||
        cfg.real_axis_tol <= 0.0 || cfg.sphericity_tol <= 0.0 ||
        cfg.residual_tol <= 0.0 || cfg.max_iterations < 1)
        throw DomainError("solver tolerances must be positive");

    if (p.degree() < 1) throw DegenerateInputError("root finder needs degree >= 1");
    if (p.coeffs.back() == 0.0)
        throw DegenerateInputError("root finder needs a nonzero leading coefficient");

    std::vector<double> monic = detail::monic_coefficients(p);

    // Exact origin roots make the relative residual criterion unreachable
    // (value and scale vanish together), so strip them up front.
    std::size_t origin_roots = 0;
    while (origin_roots + 1 < monic.size() && monic[origin_roots] == 0.0)
        ++origin_roots;
    monic.erase(monic.begin(), monic.begin() + static_cast<std::ptrdiff_t>(origin_roots));
    const int n = static_cast<int>(monic.size()) - 1;
    if (n == 0) {
        if (iterations_out != nullptr) *iterations_out = 0;
        return std::vector<std::complex<double>>(origin_roots, 0.0);
    }

    double max_abs = 0.0;
    for (int m = 0; m < n; ++m) max_abs = std::max(max_abs, std::abs(monic[m]));
    const double radius = 1.0 + max_abs;

    // Angular slots are kept at least 0.2 slot-widths apart so jittered
    // guesses never collide.
    Xoshiro256StarStar rng(cfg.seed);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double slot = static_cast<double>(i) + 0.1 + 0.8 * rng.uniform01();
        const double angle = 2.0 * M_PI * slot / static_cast<double>(n);
        z[static_cast<std::size_t>(i)] =
            std::polar(radius, angle);
    }

    std::vector<bool> converged(static_cast<std::size_t>(n), false);
    int sweeps = 0;
    double worst = 0.0;
    for (; sweeps < cfg.max_iterations; ++sweeps) {
        bool all_done = true;
        worst = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (converged[i]) continue;
            std::complex<double> value, derivative;
            detail::eval_with_derivative(monic, z[i], value, derivative);
            const double scale =
                std::max(detail::magnitude_scale(monic, std::abs(z[i])),
                         std::numeric_limits<double>::min());
            const double rel = std::abs(value) / scale;
            if (rel <= cfg.convergence_tol) {
                converged[i] = true;
                continue;
            }
            all_done = false;
            worst = std::max(worst, rel);

            if (derivative == 0.0) {
                // Stationary point; nudge off it and retry next sweep.
                z[i] += std::polar(1e-6 * radius, 2.0 * M_PI * rng.uniform01());
                continue;
            }
            const std::complex<double> newton = value / derivative;
            std::complex<double> repulsion = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) continue;
                const std::complex<double> gap = z[i] - z[j];
                if (gap == 0.0) continue;
                repulsion += 1.0 / gap;
            }
            const std::complex<double> denom = 1.0 - newton * repulsion;
            z[i] -= denom == 0.0 ? newton : newton / denom;
        }
        if (all_done) {
            if (iterations_out != nullptr) *iterations_out = sweeps;
            z.insert(z.end(), origin_roots, 0.0);
            return z;
        }
    }
    throw NoConvergenceError(sweeps, worst);
}

namespace detail {

struct WeightedPoint {
    std::complex<double> center;
    int count;
};

/// Greedy agglomeration: repeatedly merge the closest pair of clusters
/// whose separation is within cluster_radius^(1/(combined count)).
inline void agglomerate(std::vector<WeightedPoint>& pts, double cluster_radius) {
    bool merged = true;
    while (merged && pts.size() > 1) {
        merged = false;
        std::size_t best_a = 0, best_b = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                const double gap = std::abs(pts[a].center - pts[b].center);
                const double limit = std::pow(
                    cluster_radius, 1.0 / static_cast<double>(pts[a].count + pts[b].count));
                if (gap <= limit && gap < best_gap) {
                    best_gap = gap;
                    best_a = a;
                    best_b = b;
                }
            }
        if (best_gap < std::numeric_limits<double>::infinity()) {
            WeightedPoint& a = pts[best_a];
            const WeightedPoint& b = pts[best_b];
            const double total = static_cast<double>(a.count + b.count);
            a.center = (a.center * static_cast<double>(a.count) +
                        b.center * static_cast<double>(b.count)) /
                       total;
            a.count += b.count;
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(best_b));
            merged = true;
        }
    }
}

}  // namespace detail

/// Finds all roots of a real polynomial and groups them into conjugate-pair
/// clusters with multiplicities.
///
/// Pipeline: Aberth--Ehrlich solve, snap near-real roots onto the axis,
/// average each strictly-complex root with the conjugate of its closest
/// lower-half partner, then agglomerate real roots and upper-half pairs
/// separately. Cluster multiplicities always account for exactly
/// `degree` roots.
inline std::vector<ComplexRootCluster> find_roots(const RealPolynomial& p,
                                                  const SolverConfig& cfg,
                                                  int* iterations_out = nullptr) {
    const auto raw = aberth_roots(p, cfg, iterations_out);

    std::vector<double> reals;
    std::vector<std::complex<double>> uppers, lowers;
    for (const auto& root : raw) {
        if (std::abs(root.imag()) <= cfg.real_axis_tol)
            reals.push_back(root.real());
        else if (root.imag() > 0.0)
            uppers.push_back(root);
        else
            lowers.push_back(root);
    }

    // Pair each upper root with the conjugate of its closest lower partner.
    // True partners sit within the multiple-root spread, so pairing stops
    // at the 3-root cluster radius; unmatched near-real strays (simple
    // real roots whose noise crossed the axis tolerance) fold onto the
    // axis instead of pairing across distinct locations.
    std::vector<std::complex<double>> pairs;
    const double pair_bound = std::pow(cfg.cluster_radius, 1.0 / 3.0);
    while (!uppers.empty() && !lowers.empty()) {
        std::size_t best_u = 0, best_l = 0;
        double best_gap = std::numeric_limits<double>::infinity();
        for (std::size_t u = 0; u < uppers.size(); ++u)
            for (std::size_t l = 0; l < lowers.size(); ++l) {
                const double gap = std::abs(uppers[u] - std::conj(lowers[l]));
                if (gap < best_gap) {
                    best_gap = gap;
                    best_u = u;
                    best_l = l;
                }
            }
        if (best_gap > pair_bound) break;
        pairs.push_back(0.5 * (uppers[best_u] + std::conj(lowers[best_l])));
        uppers.erase(uppers.begin() + static_cast<std::ptrdiff_t>(best_u));
        lowers.erase(lowers.begin() + static_cast<std::ptrdiff_t>(best_l));
    }
    for (const auto& left : uppers) reals.push_back(left.real());
    for (const auto& left : lowers) reals.push_back(left.real());

    const std::vector<double> monic = detail::monic_coefficients(p);

    std::vector<detail::WeightedPoint> pair_pts;
    for (const auto& zm : pairs) pair_pts.push_back({zm, 1});
    detail::agglomerate(pair_pts, cfg.cluster_radius);
    for (auto& pt : pair_pts) {
        const double drift =
            std::pow(cfg.cluster_radius, 1.0 / static_cast<double>(pt.count));
        const auto refined = detail::polish_root(monic, pt.center, pt.count, drift);
        if (refined.imag() > 0.0) pt.center = refined;
    }

    // A real root of multiplicity 2m splits into m conjugate pairs whose
    // offsets from the axis stay within the 2m-root cluster radius; pair
    // clusters that close to the axis are real clusters, not spheres.
    std::vector<detail::WeightedPoint> real_pts;
    for (double v : reals) real_pts.push_back({{v, 0.0}, 1});
    std::vector<detail::WeightedPoint> kept_pairs;
    for (const auto& pt : pair_pts) {
        const double collapse_radius =
            std::pow(cfg.cluster_radius, 1.0 / static_cast<double>(2 * pt.count));
        if (pt.center.imag() <= collapse_radius)
            real_pts.push_back({{pt.center.real(), 0.0}, 2 * pt.count});
        else
            kept_pairs.push_back(pt);
    }
    detail::agglomerate(real_pts, cfg.cluster_radius);
    for (auto& pt : real_pts) {
        const double drift =
            std::pow(cfg.cluster_radius, 1.0 / static_cast<double>(pt.count));
        pt.center =
            detail::polish_root(monic, pt.center, pt.count, drift).real();
    }

    std::vector<ComplexRootCluster> clusters;
    clusters.reserve(real_pts.size() + kept_pairs.size());
    for (const auto& pt : real_pts)
        clusters.push_back({pt.center.real(), 0.0, pt.count});
    for (const auto& pt : kept_pairs)
        clusters.push_back({pt.center.real(), pt.center.imag(), pt.count});
    std::sort(clusters.begin(), clusters.end(),
              [](const ComplexRootCluster& a, const ComplexRootCluster& b) {
                  return a.x0 != b.x0 ? a.x0 < b.x0 : a.r < b.r;
              });
    return clusters;
}

}  // namespace qroots
