#include <catch2/catch.hpp>

#include "helpers.hpp"
#include "qroots/prng.hpp"
#include "qroots/selftest.hpp"
#include "qroots/testgen.hpp"

using namespace qroots;
using qroots::testing::max_component_gap;
using qroots::testing::real_convolve;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
}  // namespace

TEST_CASE("convolution of the hand cases") {
    const QuatPolynomial q({qj, qi});
    CHECK(convolve(QuatPolynomial({Quaternion::one()}), q) == q);

    // j * (w - k) = j*w - jk = j*w - i
    const auto planted = convolve(QuatPolynomial({qj}),
                                  QuatPolynomial({-qk, Quaternion::one()}));
    CHECK(planted.coeffs == std::vector<Quaternion>{-qi, qj});

    const auto squared = convolve(
        qroots::testing::from_reals({1.0, 0.0, 1.0}),
        qroots::testing::from_reals({1.0, 0.0, 1.0}));
    CHECK(squared.coeffs == std::vector<Quaternion>{Quaternion::real(1),
                                                    Quaternion{},
                                                    Quaternion::real(2),
                                                    Quaternion{},
                                                    Quaternion::real(1)});

    CHECK_THROWS_AS(convolve(QuatPolynomial({qi}, Side::right),
                             QuatPolynomial({qj}, Side::left)),
                    DomainError);
}

TEST_CASE("planting an isolated root") {
    CHECK(plant_isolated(QuatPolynomial({qi}), qk) ==
          QuatPolynomial({qj, qi}));
    CHECK(plant_isolated(QuatPolynomial({Quaternion::one()}), Quaternion::one()) ==
          QuatPolynomial({Quaternion::real(-1), Quaternion::one()}));
    CHECK(plant_isolated(qroots::testing::from_reals({1.0, 0.0, 1.0}), 2.0 * qi) ==
          QuatPolynomial({-2.0 * qi, Quaternion::one(), -2.0 * qi, Quaternion::one()}));

    CHECK_THROWS_AS(plant_isolated(QuatPolynomial({qi}, Side::left), qk),
                    DomainError);
}

TEST_CASE("planted roots evaluate to zero") {
    Xoshiro256StarStar rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        QuatPolynomial prefix;
        const int degree = static_cast<int>(rng.below(5));
        for (int m = 0; m <= degree; ++m)
            prefix.coeffs.push_back(random_quaternion(rng, 2.0));
        if (prefix.is_zero()) continue;
        const Quaternion w0 = random_quaternion(rng, 2.0);
        const auto poly = plant_isolated(prefix, w0);
        const double scale = coefficient_scale(poly, w0.modulus());
        CHECK(eval(poly, w0).modulus() <= 1e-12 * std::max(1.0, scale));
        CHECK(eval_mul_chain(poly, w0).modulus() <= 1e-12 * std::max(1.0, scale));
    }
}

TEST_CASE("central quadratic") {
    CHECK(central_quadratic(0.0, 1.0) ==
          qroots::testing::from_reals({1.0, 0.0, 1.0}));
    CHECK(central_quadratic(1.0, 2.0) ==
          qroots::testing::from_reals({5.0, -2.0, 1.0}));
    CHECK(eval(central_quadratic(1.0, 2.0), Quaternion{1, 0, 2, 0}).modulus() <
          1e-14);
    CHECK_THROWS_AS(central_quadratic(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(central_quadratic(0.0, -1.0), DomainError);
}

TEST_CASE("sphere factors commute through evaluation") {
    Xoshiro256StarStar rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        QuatPolynomial p;
        const int degree = static_cast<int>(rng.below(4));
        for (int m = 0; m <= degree; ++m)
            p.coeffs.push_back(random_quaternion(rng, 2.0));
        const auto c = central_quadratic(rng.uniform(-1.0, 1.0),
                                         rng.uniform(0.2, 2.0));
        const Quaternion w = random_quaternion(rng, 2.0);

        const Quaternion lhs = eval(convolve(p, c), w);
        const Quaternion rhs = eval(p, w) * eval(c, w);
        const double scale =
            coefficient_scale(p, w.modulus()) * coefficient_scale(c, w.modulus());
        CHECK(max_component_gap(lhs, rhs) <= 1e-11 * std::max(1.0, scale));
    }
}

TEST_CASE("basic polynomial is multiplicative over convolution") {
    Xoshiro256StarStar rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        QuatPolynomial p, q;
        for (int m = 0; m <= 2; ++m) {
            p.coeffs.push_back(random_quaternion(rng, 2.0));
            q.coeffs.push_back(random_quaternion(rng, 2.0));
        }
        const auto direct = basic_polynomial(convolve(p, q)).coeffs;
        const auto split =
            real_convolve(basic_polynomial(p).coeffs, basic_polynomial(q).coeffs);
        REQUIRE(direct.size() == split.size());
        double scale = 1.0;
        for (double b : split) scale = std::max(scale, std::abs(b));
        for (std::size_t m = 0; m < direct.size(); ++m)
            CHECK(std::abs(direct[m] - split[m]) <= 1e-12 * scale);
    }
}

TEST_CASE("generation reproduces the hand-built polynomials") {
    GeneratorSpec mixed;
    mixed.degree_bound = 3;
    mixed.planted = {PlantSphere{0.0, 1.0}, PlantIsolated{2.0 * qi}};
    const auto gen = generate(mixed);
    CHECK(gen.poly == QuatPolynomial({-2.0 * qi, Quaternion::one(), -2.0 * qi,
                                      Quaternion::one()}));
    REQUIRE(gen.expected.size() == 2);

    GeneratorSpec two_spheres;
    two_spheres.degree_bound = 4;
    two_spheres.planted = {PlantSphere{0.0, 1.0}, PlantSphere{0.0, 2.0}};
    CHECK(generate(two_spheres).poly ==
          qroots::testing::from_reals({4.0, 0.0, 5.0, 0.0, 1.0}));
}

TEST_CASE("generation rejects invalid plant lists") {
    GeneratorSpec two_points;
    two_points.planted = {PlantIsolated{qi}, PlantIsolated{qj}};
    CHECK_THROWS_AS(generate(two_points), DomainError);

    GeneratorSpec out_of_order;
    out_of_order.planted = {PlantIsolated{qi}, PlantSphere{0.0, 1.0}};
    CHECK_THROWS_AS(generate(out_of_order), DomainError);

    GeneratorSpec too_big;
    too_big.degree_bound = 3;
    too_big.planted = {PlantSphere{0.0, 1.0}, PlantSphere{1.0, 1.0}};
    CHECK_THROWS_AS(generate(too_big), DomainError);
}

TEST_CASE("generation is deterministic per seed") {
    GeneratorSpec spec;
    spec.seed = 1234;
    spec.degree_bound = 6;
    spec.planted = {PlantSphere{0.5, 1.5}};
    CHECK(generate(spec).poly == generate(spec).poly);
    spec.seed = 1235;
    CHECK(generate(spec).poly.degree() == 6);
}

TEST_CASE("oracle residual") {
    const QuatPolynomial sphere_poly(
        {Quaternion::one(), Quaternion{}, Quaternion::one()});
    CHECK(oracle_residual(sphere_poly, SphericalRoot{0.0, 1.0, 1}, 32) <= 1e-12);
    CHECK(oracle_residual(QuatPolynomial({qj, qi}), IsolatedRoot{qk, 1}) == 0.0);
    CHECK(oracle_residual(sphere_poly, IsolatedRoot{Quaternion{1, 1, 0, 0}, 1}) ==
          Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("plant soundness across seeds") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto spec = sweep_spec(seed);
        const auto gen = generate(spec);
        for (const auto& expected : gen.expected) {
            const double rel =
                oracle_residual(gen.poly, expected, 32, seed) /
                relative_scale(gen.poly, expected);
            CHECK(rel <= 1e-10);
        }
    }
}

TEST_CASE("solver recovers every planted root") {
    int solved = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto outcome = run_sweep_instance(seed);
        if (outcome.solved) {
            ++solved;
            CHECK(outcome.accounting_ok);
            CHECK(outcome.expected_roots_found);
            CHECK(outcome.planted_spheres_spherical);
            CHECK(outcome.worst_oracle_residual <= 1e-10);
            CHECK(outcome.worst_identity_residual <= 1e-8);
            CHECK(outcome.worst_probe_residual <= 1e-8);
        }
    }
    CHECK(solved >= 198);
}
