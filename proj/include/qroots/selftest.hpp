#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qroots/prng.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/solver.hpp"
#include "qroots/testgen.hpp"
#include "qroots/vieta.hpp"

namespace qroots {

struct SweepOptions {
    int degree_bound = 6;
    double max_coefficient_scale = 4.0;
    int sphere_probes = 32;
    double oracle_tol = 1e-10;    ///< planted-root residuals, relative
    double identity_tol = 1e-8;   ///< Vieta identity residuals
    double probe_tol = 1e-8;      ///< reported-sphere probe residuals, relative
    double match_tol = 1e-7;      ///< expected-vs-reported coordinate gap
    SolverConfig solver{};
};

/// Deterministic per-seed recipe: up to two separated spheres, usually one
/// isolated plant, and random filler up to the degree bound.
inline GeneratorSpec sweep_spec(std::uint64_t seed, int degree_bound = 6,
                                double max_scale = 4.0) {
    Xoshiro256StarStar rng(seed);
    GeneratorSpec spec;
    spec.degree_bound = degree_bound;
    spec.coefficient_scale = rng.uniform(0.5, max_scale);

    int spheres = static_cast<int>(rng.below(3));
    bool plant_point = rng.uniform01() < 0.75;
    if (spheres == 0 && !plant_point) plant_point = true;
    spheres = std::min(spheres, (degree_bound - (plant_point ? 1 : 0)) / 2);

    std::vector<std::pair<double, double>> placed;
    const auto separated = [&](double x0, double r) {
        return std::all_of(placed.begin(), placed.end(), [&](const auto& p) {
            return std::hypot(p.first - x0, p.second - r) >= 0.25;
        });
    };
    for (int i = 0; i < spheres; ++i) {
        double x0 = 0.0, r = 1.0;
        for (int attempt = 0; attempt < 100; ++attempt) {
            x0 = rng.uniform(-2.0, 2.0);
            r = rng.uniform(0.3, 2.0);
            if (separated(x0, r)) break;
        }
        placed.emplace_back(x0, r);
        spec.planted.emplace_back(PlantSphere{x0, r});
    }
    if (plant_point) {
        Quaternion w0;
        for (int attempt = 0; attempt < 100; ++attempt) {
            w0 = random_quaternion(rng, 2.0);
            if (w0.modulus() >= 0.3 && separated(w0.scalar_part(), w0.vec_norm()))
                break;
        }
        spec.planted.emplace_back(PlantIsolated{w0});
    }
    spec.seed = rng.next();
    return spec;
}

/// Coefficient scale at a root's modulus, the denominator for relative
/// residuals.
inline double relative_scale(const QuatPolynomial& poly, const QuatRoot& root) {
    double modulus = 0.0;
    if (const auto* iso = std::get_if<IsolatedRoot>(&root)) {
        modulus = iso->point.modulus();
    } else {
        const auto& sphere = std::get<SphericalRoot>(root);
        modulus = std::hypot(sphere.x0, sphere.r);
    }
    return coefficient_scale(poly, modulus);
}

/// Result of one generate -> solve -> oracle -> identity round.
struct InstanceOutcome {
    std::uint64_t seed{0};
    GeneratorSpec spec;
    bool solved{false};
    std::string failure;

    bool accounting_ok{false};
    bool expected_roots_found{false};
    bool planted_spheres_spherical{false};
    double worst_oracle_residual{0.0};
    double worst_identity_residual{0.0};
    double worst_probe_residual{0.0};
    bool pass{false};
};

inline int accounted_degree(const RootSet& rs) {
    int total = rs.zero_root_multiplicity;
    for (const auto& root : rs.roots) {
        if (const auto* iso = std::get_if<IsolatedRoot>(&root))
            total += iso->multiplicity;
        else
            total += 2 * std::get<SphericalRoot>(root).multiplicity;
    }
    return total;
}

inline InstanceOutcome run_sweep_instance(std::uint64_t seed,
                                          const SweepOptions& opt = {}) {
    InstanceOutcome out;
    out.seed = seed;
    out.spec = sweep_spec(seed, opt.degree_bound, opt.max_coefficient_scale);
    const Generated gen = generate(out.spec);

    RootSet rs;
    try {
        rs = solve(gen.poly, opt.solver);
        out.solved = true;
    } catch (const Error& err) {
        out.failure = err.what();
        return out;
    }

    out.accounting_ok = accounted_degree(rs) == rs.degree;

    out.expected_roots_found = true;
    out.planted_spheres_spherical = true;
    for (const auto& expected : gen.expected) {
        const double rel =
            oracle_residual(gen.poly, expected, opt.sphere_probes, seed) /
            relative_scale(gen.poly, expected);
        out.worst_oracle_residual = std::max(out.worst_oracle_residual, rel);

        if (const auto* sphere = std::get_if<SphericalRoot>(&expected)) {
            const bool found = std::any_of(
                rs.roots.begin(), rs.roots.end(), [&](const QuatRoot& root) {
                    const auto* got = std::get_if<SphericalRoot>(&root);
                    return got != nullptr &&
                           std::abs(got->x0 - sphere->x0) <= opt.match_tol &&
                           std::abs(got->r - sphere->r) <= opt.match_tol;
                });
            out.expected_roots_found &= found;
            out.planted_spheres_spherical &= found;
        } else {
            const auto& point = std::get<IsolatedRoot>(expected).point;
            const bool found = std::any_of(
                rs.roots.begin(), rs.roots.end(), [&](const QuatRoot& root) {
                    const auto* got = std::get_if<IsolatedRoot>(&root);
                    return got != nullptr &&
                           (got->point - point).modulus() <= opt.match_tol;
                });
            out.expected_roots_found &= found;
        }
    }

    const VietaReport report = make_vieta_report(gen.poly, rs);
    out.worst_identity_residual =
        std::max(report.product_moduli.residual, report.sum_scalars.residual);
    if (report.sum_sc_over_modsq)
        out.worst_identity_residual =
            std::max(out.worst_identity_residual, report.sum_sc_over_modsq->residual);

    for (const auto& root : rs.roots) {
        if (!std::holds_alternative<SphericalRoot>(root)) continue;
        const double rel = oracle_residual(gen.poly, root, opt.sphere_probes, seed) /
                           relative_scale(gen.poly, root);
        out.worst_probe_residual = std::max(out.worst_probe_residual, rel);
    }

    out.pass = out.solved && out.accounting_ok && out.expected_roots_found &&
               out.planted_spheres_spherical &&
               out.worst_oracle_residual <= opt.oracle_tol &&
               out.worst_identity_residual <= opt.identity_tol &&
               out.worst_probe_residual <= opt.probe_tol;
    return out;
}

struct SelftestSummary {
    int count{0};
    int passes{0};
    int failures{0};
    int solved{0};
    std::optional<std::uint64_t> first_failing_seed;
    double worst_oracle_residual{0.0};
    double worst_identity_residual{0.0};
    double worst_probe_residual{0.0};
};

inline SelftestSummary run_selftest(std::uint64_t first_seed, int count,
                                    const SweepOptions& opt = {}) {
    SelftestSummary summary;
    summary.count = count;
    for (int i = 0; i < count; ++i) {
        const auto outcome = run_sweep_instance(first_seed + static_cast<std::uint64_t>(i), opt);
        if (outcome.solved) ++summary.solved;
        if (outcome.pass) {
            ++summary.passes;
        } else {
            ++summary.failures;
            if (!summary.first_failing_seed)
                summary.first_failing_seed = outcome.seed;
        }
        summary.worst_oracle_residual =
            std::max(summary.worst_oracle_residual, outcome.worst_oracle_residual);
        summary.worst_identity_residual =
            std::max(summary.worst_identity_residual, outcome.worst_identity_residual);
        summary.worst_probe_residual =
            std::max(summary.worst_probe_residual, outcome.worst_probe_residual);
    }
    return summary;
}

}  // namespace qroots
