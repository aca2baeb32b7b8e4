#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qroots/errors.hpp"
#include "qroots/prng.hpp"
#include "qroots/qpoly.hpp"
#include "qroots/quaternion.hpp"
#include "qroots/solver.hpp"

namespace qroots {

/// Horner evaluation by repeated quaternion multiplication. Independent of
/// the power-reduction path used by eval(); the verification oracle below
/// is built on this.
inline Quaternion eval_mul_chain(const QuatPolynomial& poly, const Quaternion& w) {
    if (poly.coeffs.empty()) return {};
    Quaternion acc = poly.coeffs.back();
    for (std::size_t m = poly.coeffs.size() - 1; m-- > 0;)
        acc = poly.side == Side::right ? acc * w + poly.coeffs[m]
                                       : w * acc + poly.coeffs[m];
    return acc;
}

/// Formal coefficient convolution C_j = sum_k p_k q_{j-k}. For right
/// polynomials p's coefficients multiply from the left; mirrored for left
/// polynomials. One-sided evaluation is not multiplicative in general, so
/// planted-root guarantees rest on the specific arguments below.
inline QuatPolynomial convolve(const QuatPolynomial& p, const QuatPolynomial& q) {
    if (p.side != q.side) throw DomainError("convolve: mismatched sides");
    QuatPolynomial out;
    out.side = p.side;
    out.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, Quaternion{});
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        for (std::size_t l = 0; l < q.coeffs.size(); ++l)
            out.coeffs[k + l] += p.side == Side::right
                                     ? p.coeffs[k] * q.coeffs[l]
                                     : q.coeffs[l] * p.coeffs[k];
    return out;
}

/// Appends the right factor (w - w0), guaranteeing w0 as a root of the
/// result: the coefficients C_j = prefix_{j-1} - prefix_j * w0 telescope
/// to zero at w0 because w0 commutes with its own powers.
inline QuatPolynomial plant_isolated(const QuatPolynomial& prefix,
                                     const Quaternion& w0) {
    if (prefix.side != Side::right)
        throw DomainError("plant_isolated: the telescoping argument needs a right polynomial");
    return convolve(prefix, QuatPolynomial({-w0, Quaternion::one()}, prefix.side));
}

/// The real quadratic w^2 - 2*x0*w + (x0^2 + r^2), which vanishes exactly
/// on the sphere {Sc(w) = x0, |Vec(w)| = r}. Real coefficients commute
/// with everything, so convolving any polynomial with this factor keeps
/// the sphere inside the root set.
inline QuatPolynomial central_quadratic(double x0, double r,
                                        Side side = Side::right) {
    if (r <= 0.0) throw DomainError("central_quadratic: r must be > 0");
    return QuatPolynomial({Quaternion::real(x0 * x0 + r * r),
                           Quaternion::real(-2.0 * x0), Quaternion::one()},
                          side);
}

struct PlantSphere {
    double x0;
    double r;
};

struct PlantIsolated {
    Quaternion point;
};

using PlantAction = std::variant<PlantSphere, PlantIsolated>;

/// Deterministic recipe for a polynomial with known roots: spheres come
/// from central quadratic factors, at most one isolated point from a
/// final right linear factor (only the last right factor's root survives
/// one-sided multiplication), and any remaining degree budget is filled
/// with seeded random coefficients.
struct GeneratorSpec {
    std::uint64_t seed{0};
    int degree_bound{6};
    double coefficient_scale{2.0};
    std::vector<PlantAction> planted;
};

struct Generated {
    QuatPolynomial poly;
    std::vector<QuatRoot> expected;
};

inline Generated generate(const GeneratorSpec& spec) {
    int spheres = 0;
    int points = 0;
    for (const auto& action : spec.planted) {
        if (std::holds_alternative<PlantSphere>(action))
            ++spheres;
        else
            ++points;
    }
    if (points > 1)
        throw DomainError("generate: at most one isolated plant is guaranteed");
    if (points == 1 &&
        !std::holds_alternative<PlantIsolated>(spec.planted.back()))
        throw DomainError("generate: the isolated plant must come last");
    const int planted_degree = 2 * spheres + points;
    if (planted_degree > spec.degree_bound)
        throw DomainError("generate: planted roots exceed the degree bound");

    Generated out;
    out.poly = QuatPolynomial({Quaternion::one()}, Side::right);
    for (const auto& action : spec.planted) {
        if (const auto* sphere = std::get_if<PlantSphere>(&action)) {
            out.poly = convolve(out.poly, central_quadratic(sphere->x0, sphere->r));
            out.expected.push_back(SphericalRoot{sphere->x0, sphere->r, 1});
        }
    }

    // Filler components are kept away from zero so the product's extreme
    // coefficients stay well scaled.
    const int filler_degree = spec.degree_bound - planted_degree;
    if (filler_degree > 0 || spheres + points == 0) {
        Xoshiro256StarStar rng(spec.seed);
        QuatPolynomial filler;
        filler.side = Side::right;
        for (int m = 0; m <= filler_degree; ++m) {
            Quaternion c;
            do {
                c = random_quaternion(rng, spec.coefficient_scale);
            } while (c.modulus() < 0.25);
            filler.coeffs.push_back(c);
        }
        out.poly = convolve(out.poly, filler);
    }

    if (points == 1) {
        const auto& plant = std::get<PlantIsolated>(spec.planted.back());
        out.poly = plant_isolated(out.poly, plant.point);
        out.expected.push_back(IsolatedRoot{plant.point, 1});
    }
    return out;
}

/// Worst evaluation residual of a claimed root, by the multiplication
/// chain evaluator. Spheres are probed along the three coordinate unit
/// directions, the unit diagonal, and `samples` seeded random unit pure
/// directions.
inline double oracle_residual(const QuatPolynomial& poly, const QuatRoot& root,
                              int samples = 32, std::uint64_t seed = 0) {
    if (const auto* iso = std::get_if<IsolatedRoot>(&root))
        return eval_mul_chain(poly, iso->point).modulus();

    const auto& sphere = std::get<SphericalRoot>(root);
    std::vector<Quaternion> dirs = {
        Quaternion::unit_i(), Quaternion::unit_j(), Quaternion::unit_k(),
        Quaternion{0.0, 1.0, 1.0, 1.0} / std::sqrt(3.0)};
    Xoshiro256StarStar rng(seed);
    for (int d = 0; d < samples; ++d) dirs.push_back(random_unit_pure(rng));

    double worst = 0.0;
    for (const auto& u : dirs) {
        const Quaternion probe = Quaternion::real(sphere.x0) + sphere.r * u;
        worst = std::max(worst, eval_mul_chain(poly, probe).modulus());
    }
    return worst;
}

}  // namespace qroots
