#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "qroots/errors.hpp"
#include "qroots/json_io.hpp"
#include "qroots/powers.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/selftest.hpp"
#include "qroots/solver.hpp"
#include "qroots/testgen.hpp"
#include "qroots/vieta.hpp"

namespace qroots::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_no_convergence = 3;
inline constexpr int exit_residual = 4;
inline constexpr int exit_precondition = 5;

namespace detail {

inline std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) throw SchemaError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw SchemaError(std::string("input is not valid JSON: ") + err.what());
    }
}

struct Accounting {
    int zero;
    int isolated;
    int spherical;
    int total;
    bool balanced;
};

inline Accounting accounting_of(const RootSet& rs) {
    Accounting acc{rs.zero_root_multiplicity, 0, 0, 0, false};
    for (const auto& root : rs.roots) {
        if (const auto* iso = std::get_if<IsolatedRoot>(&root))
            acc.isolated += iso->multiplicity;
        else
            acc.spherical += std::get<SphericalRoot>(root).multiplicity;
    }
    acc.total = acc.zero + acc.isolated + 2 * acc.spherical;
    acc.balanced = acc.total == rs.degree;
    return acc;
}

struct ReportedResiduals {
    double worst_isolated = 0.0;
    double worst_spherical = 0.0;
};

inline ReportedResiduals reported_residuals(const QuatPolynomial& poly,
                                            const RootSet& rs,
                                            std::uint64_t seed) {
    ReportedResiduals out;
    for (const auto& root : rs.roots) {
        const double rel =
            oracle_residual(poly, root, 32, seed) / relative_scale(poly, root);
        if (std::holds_alternative<IsolatedRoot>(root))
            out.worst_isolated = std::max(out.worst_isolated, rel);
        else
            out.worst_spherical = std::max(out.worst_spherical, rel);
    }
    return out;
}

inline std::string text_root(const QuatRoot& root) {
    char line[160];
    if (const auto* iso = std::get_if<IsolatedRoot>(&root)) {
        std::snprintf(line, sizeof line,
                      "isolated   point=(% .12g, % .12g, % .12g, % .12g)  mult=%d",
                      iso->point.s, iso->point.x, iso->point.y, iso->point.z,
                      iso->multiplicity);
    } else {
        const auto& sphere = std::get<SphericalRoot>(root);
        std::snprintf(line, sizeof line,
                      "spherical  x0=% .12g  r=% .12g  mult=%d", sphere.x0,
                      sphere.r, sphere.multiplicity);
    }
    return line;
}

inline std::string text_identity(const char* name, const IdentityCheck& check) {
    char line[160];
    std::snprintf(line, sizeof line, "%-22s lhs=% .12g  rhs=% .12g  residual=%.3g",
                  name, check.lhs, check.rhs, check.residual);
    return line;
}

}  // namespace detail

struct CliConfig {
    std::string input_path = "-";
    bool text = false;
    bool check_vieta = false;
    bool basic_roots = false;
    bool require_reciprocal = false;
    std::uint64_t seed = 0;
    int count = 100;
    int degree_bound = 6;
    double coefficient_scale = 4.0;  // matches the selftest sweep, so
                                     // gen --seed reproduces its instances
    SolverConfig solver{};
};

inline int cmd_solve(const CliConfig& cfg) {
    const auto poly =
        polynomial_from_json(detail::parse_json(detail::read_input(cfg.input_path)));
    SolveDiagnostics diag;
    const RootSet rs = solve(poly, cfg.solver, &diag);
    const auto acc = detail::accounting_of(rs);
    const auto residuals = detail::reported_residuals(poly, rs, cfg.solver.seed);

    if (cfg.text) {
        std::cout << "degree " << rs.degree << ", zero-root multiplicity "
                  << rs.zero_root_multiplicity << "\n";
        for (const auto& root : rs.roots)
            std::cout << "  " << detail::text_root(root) << "\n";
        std::cout << "accounting: zero " << acc.zero << " + isolated "
                  << acc.isolated << " + 2*spherical " << acc.spherical << " = "
                  << acc.total << (acc.balanced ? " (balanced)\n" : " (UNBALANCED)\n");
        if (cfg.check_vieta) {
            const auto report = make_vieta_report(poly, rs);
            std::cout << detail::text_identity("product of moduli",
                                               report.product_moduli)
                      << "\n"
                      << detail::text_identity("sum of scalar parts",
                                               report.sum_scalars)
                      << "\n";
            if (report.sum_sc_over_modsq)
                std::cout << detail::text_identity("reciprocal scalar sum",
                                                   *report.sum_sc_over_modsq)
                          << "\n";
        }
    } else {
        std::string out = "{\"input\":" + json_polynomial(poly);
        out += ",\"degree\":" + std::to_string(rs.degree);
        out += ",\"basic_polynomial\":" + json_real_array(diag.basic.coeffs);
        out += ",\"iterations\":" + std::to_string(diag.iterations);
        out += ",\"rootset\":" + json_rootset(rs);
        out += ",\"degree_accounting\":{\"zero\":" + std::to_string(acc.zero) +
               ",\"isolated\":" + std::to_string(acc.isolated) +
               ",\"spherical\":" + std::to_string(acc.spherical) +
               ",\"total\":" + std::to_string(acc.total) + ",\"balanced\":" +
               (acc.balanced ? "true" : "false") + "}";
        out += ",\"residuals\":{\"worst_isolated\":" +
               json_number(residuals.worst_isolated) +
               ",\"worst_spherical\":" + json_number(residuals.worst_spherical) +
               "}";
        if (cfg.check_vieta)
            out += ",\"vieta\":" + json_vieta(make_vieta_report(poly, rs));
        out += "}";
        std::cout << out << "\n";
    }
    if (!acc.balanced) {
        std::cerr << "degree accounting does not balance\n";
        return exit_residual;
    }
    return exit_ok;
}

inline int cmd_vieta(const CliConfig& cfg) {
    const auto poly =
        polynomial_from_json(detail::parse_json(detail::read_input(cfg.input_path)));
    const RootSet rs = solve(poly, cfg.solver);
    const auto report = make_vieta_report(poly, rs);
    if (cfg.require_reciprocal && !report.sum_sc_over_modsq)
        throw PreconditionError(
            "reciprocal scalar sum requested but the constant coefficient is zero");

    if (cfg.text) {
        std::cout << detail::text_identity("product of moduli",
                                           report.product_moduli)
                  << "\n"
                  << detail::text_identity("sum of scalar parts", report.sum_scalars)
                  << "\n";
        if (report.sum_sc_over_modsq)
            std::cout << detail::text_identity("reciprocal scalar sum",
                                               *report.sum_sc_over_modsq)
                      << "\n";
        else
            std::cout << "reciprocal scalar sum  (skipped: zero constant coefficient)\n";
        std::cout << "pure-vector roots: "
                  << (report.pure_vector.applies ? "yes" : "no")
                  << "  dot_top=" << report.pure_vector.dot_top
                  << "  dot_bottom=" << report.pure_vector.dot_bottom << "\n";
    } else {
        std::cout << "{\"input\":" + json_polynomial(poly) +
                         ",\"rootset\":" + json_rootset(rs) +
                         ",\"vieta\":" + json_vieta(report) + "}\n";
    }
    return exit_ok;
}

inline int cmd_basic(const CliConfig& cfg) {
    const auto poly =
        polynomial_from_json(detail::parse_json(detail::read_input(cfg.input_path)));
    const auto normalized = normalize(poly);
    const auto basic = basic_polynomial(normalized.poly);

    std::string clusters_json;
    std::string clusters_text;
    if (cfg.basic_roots) {
        const auto clusters = basic.degree() == 0
                                  ? std::vector<ComplexRootCluster>{}
                                  : find_roots(basic, cfg.solver);
        clusters_json = ",\"clusters\":[";
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (i > 0) clusters_json += ",";
            clusters_json += "{\"x0\":" + json_number(clusters[i].x0) +
                             ",\"r\":" + json_number(clusters[i].r) +
                             ",\"multiplicity\":" +
                             std::to_string(clusters[i].multiplicity) + "}";
            char line[120];
            std::snprintf(line, sizeof line,
                          "  cluster x0=% .12g  r=% .12g  mult=%d\n",
                          clusters[i].x0, clusters[i].r, clusters[i].multiplicity);
            clusters_text += line;
        }
        clusters_json += "]";
    }

    if (cfg.text) {
        std::cout << "zero-root multiplicity " << normalized.zero_root_multiplicity
                  << "\nbasic polynomial coefficients (ascending):\n";
        for (double b : basic.coeffs) std::cout << "  " << json_number(b) << "\n";
        std::cout << clusters_text;
    } else {
        std::cout << "{\"input\":" + json_polynomial(poly) +
                         ",\"zero_root_multiplicity\":" +
                         std::to_string(normalized.zero_root_multiplicity) +
                         ",\"basic_polynomial\":" + json_real_array(basic.coeffs) +
                         clusters_json + "}\n";
    }
    return exit_ok;
}

inline int cmd_power(const CliConfig& cfg) {
    const auto j = detail::parse_json(detail::read_input(cfg.input_path));
    if (!j.is_object() || !j.contains("w") || !j.contains("n"))
        throw SchemaError("power input must be {\"w\": [4 numbers], \"n\": integer}");
    const Quaternion w = quaternion_from_json(j["w"]);
    if (!j["n"].is_number_integer() || j["n"].get<int>() < 0)
        throw SchemaError("power exponent n must be a nonnegative integer");
    const int n = j["n"].get<int>();

    const double x0 = w.scalar_part();
    const double rho = w.modulus_sq();
    const Quaternion wn = power(w, n);
    std::vector<PowerReduction> reductions;
    if (n >= 1) reductions = power_reductions(n, x0, rho);

    if (cfg.text) {
        std::cout << "x0 = " << json_number(x0) << ", rho = " << json_number(rho)
                  << "\n";
        for (int m = 1; m <= n; ++m)
            std::cout << "  degree " << m
                      << ": w_coeff = " << json_number(reductions[m - 1].w_coeff)
                      << ", norm_coeff = "
                      << json_number(reductions[m - 1].norm_coeff) << "\n";
        std::cout << "w^" << n << " = " << json_quaternion(wn) << "\n";
    } else {
        std::string out = "{\"w\":" + json_quaternion(w) +
                          ",\"n\":" + std::to_string(n) +
                          ",\"x0\":" + json_number(x0) +
                          ",\"rho\":" + json_number(rho) + ",\"reductions\":[";
        for (int m = 1; m <= n; ++m) {
            if (m > 1) out += ",";
            out += "{\"degree\":" + std::to_string(m) +
                   ",\"w_coeff\":" + json_number(reductions[m - 1].w_coeff) +
                   ",\"norm_coeff\":" + json_number(reductions[m - 1].norm_coeff) +
                   "}";
        }
        out += "],\"power\":" + json_quaternion(wn) + "}";
        std::cout << out << "\n";
    }
    return exit_ok;
}

inline int cmd_gen(const CliConfig& cfg, bool explicit_input) {
    GeneratorSpec spec;
    if (explicit_input)
        spec = generator_spec_from_json(
            detail::parse_json(detail::read_input(cfg.input_path)));
    else
        spec = sweep_spec(cfg.seed, cfg.degree_bound, cfg.coefficient_scale);
    const Generated gen = generate(spec);

    if (cfg.text) {
        std::cout << "polynomial: " << json_polynomial(gen.poly) << "\n";
        for (const auto& root : gen.expected)
            std::cout << "  expected " << detail::text_root(root) << "\n";
    } else {
        std::string out = "{\"spec\":" + json_generator_spec(spec);
        out += ",\"polynomial\":" + json_polynomial(gen.poly);
        out += ",\"expected_roots\":[";
        for (std::size_t i = 0; i < gen.expected.size(); ++i) {
            if (i > 0) out += ",";
            out += json_root(gen.expected[i]);
        }
        out += "]}";
        std::cout << out << "\n";
    }
    return exit_ok;
}

inline int cmd_selftest(const CliConfig& cfg) {
    SweepOptions opt;
    opt.solver = cfg.solver;
    opt.degree_bound = cfg.degree_bound;
    opt.max_coefficient_scale = cfg.coefficient_scale;
    const auto summary = run_selftest(cfg.seed, cfg.count, opt);

    if (cfg.text) {
        std::cout << "selftest: " << summary.passes << "/" << summary.count
                  << " passed, " << summary.solved << " solved\n"
                  << "worst residuals: oracle "
                  << json_number(summary.worst_oracle_residual) << ", identity "
                  << json_number(summary.worst_identity_residual) << ", probe "
                  << json_number(summary.worst_probe_residual) << "\n";
        if (summary.first_failing_seed)
            std::cout << "first failing seed: " << *summary.first_failing_seed
                      << "\n";
    } else {
        std::string out = "{\"seed\":" + std::to_string(cfg.seed);
        out += ",\"count\":" + std::to_string(summary.count);
        out += ",\"passes\":" + std::to_string(summary.passes);
        out += ",\"failures\":" + std::to_string(summary.failures);
        out += ",\"solved\":" + std::to_string(summary.solved);
        out += ",\"first_failing_seed\":";
        out += summary.first_failing_seed
                   ? std::to_string(*summary.first_failing_seed)
                   : std::string("null");
        out += ",\"worst\":{\"oracle\":" + json_number(summary.worst_oracle_residual);
        out += ",\"identity\":" + json_number(summary.worst_identity_residual);
        out += ",\"probe\":" + json_number(summary.worst_probe_residual) + "}}";
        std::cout << out << "\n";
    }
    if (summary.failures > 0) {
        if (summary.first_failing_seed)
            std::cerr << "selftest failed; reproduce with gen --seed "
                      << *summary.first_failing_seed << "\n";
        return exit_residual;
    }
    return exit_ok;
}

/// Parses flags, dispatches the subcommand, and maps library errors onto
/// the documented exit codes.
inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"root finding and Vieta-identity reports for one-sided "
                 "quaternionic polynomials"};
    app.require_subcommand(1);

    CliConfig cfg;
    const auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input)
            cmd->add_option("-i,--input", cfg.input_path,
                            "input path, or '-' for standard input");
        cmd->add_flag_callback("--json", [&cfg] { cfg.text = false; },
                               "emit JSON (default)");
        cmd->add_flag_callback("--text", [&cfg] { cfg.text = true; },
                               "emit a human-readable report");
        cmd->add_option("--tol-residual", cfg.solver.residual_tol,
                        "relative residual bound for reported roots");
        cmd->add_option("--tol-sphericity", cfg.solver.sphericity_tol,
                        "relative sphericity-criterion threshold");
        cmd->add_option("--tol-real-axis", cfg.solver.real_axis_tol,
                        "imaginary-part snap tolerance");
        cmd->add_option("--max-iter", cfg.solver.max_iterations,
                        "iteration budget for the root finder");
        cmd->add_option("--seed", cfg.seed, "seed for jitter and generators");
    };

    auto* solve_cmd = app.add_subcommand("solve", "find and classify all roots");
    add_common(solve_cmd, true);
    solve_cmd->add_flag("--check-vieta", cfg.check_vieta,
                        "append the Vieta identity report");

    auto* vieta_cmd =
        app.add_subcommand("vieta", "solve, then report the Vieta identities");
    add_common(vieta_cmd, true);
    vieta_cmd->add_flag("--require-reciprocal", cfg.require_reciprocal,
                        "fail (exit 5) when the reciprocal scalar sum is "
                        "unavailable because the constant coefficient is zero");

    auto* basic_cmd =
        app.add_subcommand("basic", "emit the basic polynomial of the input");
    add_common(basic_cmd, true);
    basic_cmd->add_flag("--roots", cfg.basic_roots,
                        "also emit its conjugate-pair root clusters");

    auto* power_cmd = app.add_subcommand(
        "power", "power-reduction coefficients and w^n for an input quaternion");
    add_common(power_cmd, true);

    auto* gen_cmd = app.add_subcommand(
        "gen", "emit a generated polynomial with its guaranteed roots");
    add_common(gen_cmd, true);
    gen_cmd->add_option("--degree-bound", cfg.degree_bound,
                        "degree bound for seeded generation");
    gen_cmd->add_option("--scale", cfg.coefficient_scale,
                        "coefficient scale for seeded generation");

    auto* selftest_cmd = app.add_subcommand(
        "selftest", "run the generate/solve/verify loop over consecutive seeds");
    add_common(selftest_cmd, false);
    selftest_cmd->add_option("--count", cfg.count, "number of seeds to run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? exit_ok : exit_input_error;
    }

    cfg.solver.seed = cfg.seed;
    try {
        if (solve_cmd->parsed()) return cmd_solve(cfg);
        if (vieta_cmd->parsed()) return cmd_vieta(cfg);
        if (basic_cmd->parsed()) return cmd_basic(cfg);
        if (power_cmd->parsed()) return cmd_power(cfg);
        if (gen_cmd->parsed()) return cmd_gen(cfg, gen_cmd->count("-i") > 0);
        if (selftest_cmd->parsed()) return cmd_selftest(cfg);
        return exit_input_error;
    } catch (const SchemaError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return exit_input_error;
    } catch (const PreconditionError& err) {
        std::cerr << "precondition violated: " << err.what() << "\n";
        return exit_precondition;
    } catch (const NoConvergenceError& err) {
        std::cerr << "no convergence: " << err.what() << "\n";
        return exit_no_convergence;
    } catch (const ResidualTooLargeError& err) {
        std::cerr << "residual too large: " << err.what() << "\n";
        return exit_residual;
    } catch (const ZeroPolynomialError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return exit_input_error;
    } catch (const DegenerateInputError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return exit_input_error;
    } catch (const DomainError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace qroots::cli
