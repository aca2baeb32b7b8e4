#include <catch2/catch.hpp>

#include <complex>

#include "helpers.hpp"
#include "qroots/croots.hpp"
#include "qroots/prng.hpp"
#include "qroots/qpoly.hpp"

using namespace qroots;
using qroots::testing::real_convolve;

namespace {

int accounted(const std::vector<ComplexRootCluster>& clusters) {
    int total = 0;
    for (const auto& c : clusters)
        total += c.r > 0.0 ? 2 * c.multiplicity : c.multiplicity;
    return total;
}

RealPolynomial from_real_factors(const std::vector<std::vector<double>>& factors) {
    std::vector<double> coeffs{1.0};
    for (const auto& f : factors) coeffs = real_convolve(coeffs, f);
    return RealPolynomial(coeffs);
}

}  // namespace

TEST_CASE("z^2 + 1 yields the unit conjugate pair") {
    const auto clusters = find_roots(RealPolynomial({1.0, 0.0, 1.0}), {});
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].x0 == Approx(0.0).margin(1e-12));
    CHECK(clusters[0].r == Approx(1.0).epsilon(1e-12));
    CHECK(clusters[0].multiplicity == 1);
}

TEST_CASE("(z^2 + 1)^2 collapses to one double cluster") {
    const auto clusters = find_roots(RealPolynomial({1.0, 0.0, 2.0, 0.0, 1.0}), {});
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].x0 == Approx(0.0).margin(1e-7));
    CHECK(clusters[0].r == Approx(1.0).epsilon(1e-7));
    CHECK(clusters[0].multiplicity == 2);
}

TEST_CASE("(z-1)^2 (z^2+4) separates a double real root and a simple pair") {
    // Coefficient list fixed by the convolution oracle.
    const auto coeffs = real_convolve({1.0, -2.0, 1.0}, {4.0, 0.0, 1.0});
    CHECK(coeffs == std::vector<double>{4.0, -8.0, 5.0, -2.0, 1.0});

    const auto clusters = find_roots(RealPolynomial(coeffs), {});
    REQUIRE(clusters.size() == 2);
    CHECK(clusters[0].x0 == Approx(0.0).margin(1e-10));
    CHECK(clusters[0].r == Approx(2.0).epsilon(1e-10));
    CHECK(clusters[0].multiplicity == 1);
    CHECK(clusters[1].x0 == Approx(1.0).epsilon(1e-6));
    CHECK(clusters[1].r == 0.0);
    CHECK(clusters[1].multiplicity == 2);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(find_roots(RealPolynomial({3.0}), {}), DegenerateInputError);
    CHECK_THROWS_AS(find_roots(RealPolynomial({1.0, 2.0, 0.0}), {}),
                    DegenerateInputError);
}

TEST_CASE("exact origin roots deflate") {
    const auto pure = find_roots(RealPolynomial({0.0, 0.0, 1.0}), {});
    REQUIRE(pure.size() == 1);
    CHECK(pure[0] == ComplexRootCluster{0.0, 0.0, 2});

    // z^2 (z^2 + 4): origin pair plus a conjugate pair
    const auto mixed = find_roots(RealPolynomial({0.0, 0.0, 4.0, 0.0, 1.0}), {});
    REQUIRE(mixed.size() == 2);
    CHECK(mixed[0].x0 == 0.0);
    CHECK(mixed[0].r == 0.0);
    CHECK(mixed[0].multiplicity == 2);
    CHECK(mixed[1].x0 == Approx(0.0).margin(1e-12));
    CHECK(mixed[1].r == Approx(2.0).epsilon(1e-12));
    CHECK(mixed[1].multiplicity == 1);
}

TEST_CASE("an exhausted iteration budget reports its state") {
    SolverConfig cfg;
    cfg.max_iterations = 1;
    const RealPolynomial poly({7.0, -3.0, 2.0, 0.5, -1.0, 1.0, 1.0});
    try {
        find_roots(poly, cfg);
        FAIL("expected NoConvergenceError");
    } catch (const NoConvergenceError& err) {
        CHECK(err.iterations == 1);
        CHECK(err.worst_residual > 0.0);
    }
}

TEST_CASE("residuals at simple cluster roots are small") {
    Xoshiro256StarStar rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        // Well-separated random factors, roots in a moderate disk.
        std::vector<std::vector<double>> factors;
        const int quads = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < quads; ++i) {
            const double re = rng.uniform(-1.5, 1.5);
            const double im = rng.uniform(0.2, 1.5);
            factors.push_back({re * re + im * im, -2.0 * re, 1.0});
        }
        factors.push_back({rng.uniform(-1.5, 1.5), 1.0});
        const auto poly = from_real_factors(factors);

        std::vector<double> monic = poly.coeffs;
        for (double& b : monic) b /= poly.coeffs.back();
        const RealPolynomial pm{monic};

        const auto clusters = find_roots(poly, {});
        CHECK(accounted(clusters) == poly.degree());
        for (const auto& c : clusters) {
            const std::complex<double> z{c.x0, c.r};
            const double bound =
                1e-10 * std::pow(std::max(1.0, std::abs(z)),
                                 static_cast<double>(poly.degree()));
            if (c.multiplicity == 1) CHECK(std::abs(pm.eval(z)) <= bound);
        }
    }
}

TEST_CASE("raw root multiset is conjugate-symmetric") {
    Xoshiro256StarStar rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> coeffs;
        const int degree = 2 + static_cast<int>(rng.below(7));
        for (int m = 0; m < degree; ++m) coeffs.push_back(rng.uniform(-3.0, 3.0));
        coeffs.push_back(rng.uniform(0.5, 3.0));

        SolverConfig cfg;
        cfg.seed = trial;
        const auto raw = aberth_roots(RealPolynomial(coeffs), cfg);
        for (const auto& z : raw) {
            double best = 1e300;
            for (const auto& other : raw)
                best = std::min(best, std::abs(std::conj(z) - other));
            CHECK(best <= cfg.cluster_radius);
        }
    }
}

TEST_CASE("cluster multiplicities account for the full degree") {
    Xoshiro256StarStar rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> coeffs;
        const int degree = 1 + static_cast<int>(rng.below(10));
        for (int m = 0; m < degree; ++m) coeffs.push_back(rng.uniform(-3.0, 3.0));
        coeffs.push_back(rng.uniform(0.5, 3.0));
        const auto clusters = find_roots(RealPolynomial(coeffs), {});
        CHECK(accounted(clusters) == degree);
        for (const auto& c : clusters) CHECK(c.r >= 0.0);
    }
}

TEST_CASE("basic polynomials keep the origin root-free when A_0 is nonzero") {
    Xoshiro256StarStar rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        QuatPolynomial poly;
        const int degree = 1 + static_cast<int>(rng.below(5));
        for (int m = 0; m <= degree; ++m) {
            Quaternion c;
            do {
                c = random_quaternion(rng, 2.0);
            } while (c.modulus() < 0.2);
            poly.coeffs.push_back(c);
        }
        const auto clusters = find_roots(basic_polynomial(poly), {});
        for (const auto& c : clusters)
            CHECK(std::hypot(c.x0, c.r) > 1e-9);
    }
}

TEST_CASE("real clusters of a basic polynomial have even multiplicity") {
    // (w - 1)^2 over the reals: its basic polynomial is (z - 1)^4.
    const auto basic = basic_polynomial(
        qroots::testing::from_reals({1.0, -2.0, 1.0}));
    CHECK(basic.coeffs == std::vector<double>{1.0, -4.0, 6.0, -4.0, 1.0});
    const auto clusters = find_roots(basic, {});
    REQUIRE(clusters.size() == 1);
    CHECK(clusters[0].r == 0.0);
    CHECK(clusters[0].multiplicity == 4);
    CHECK(clusters[0].x0 == Approx(1.0).margin(2e-4));

    Xoshiro256StarStar rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> reals;
        const int degree = 1 + static_cast<int>(rng.below(4));
        for (int m = 0; m <= degree; ++m) reals.push_back(rng.uniform(-2.0, 2.0));
        if (std::abs(reals.back()) < 0.2) reals.back() = 1.0;
        const auto clusters2 =
            find_roots(basic_polynomial(qroots::testing::from_reals(reals)), {});
        for (const auto& c : clusters2)
            if (c.r == 0.0) CHECK(c.multiplicity % 2 == 0);
    }
}

TEST_CASE("output is a pure function of polynomial and config") {
    const RealPolynomial poly({-6.0, 11.0, -6.0, 1.0});
    SolverConfig cfg;
    cfg.seed = 77;
    const auto a = find_roots(poly, cfg);
    const auto b = find_roots(poly, cfg);
    CHECK(a == b);

    // A different seed moves the initial guesses, not the clusters.
    cfg.seed = 78;
    const auto c = find_roots(poly, cfg);
    REQUIRE(c.size() == a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x0 == Approx(c[i].x0).margin(1e-9));
        CHECK(a[i].multiplicity == c[i].multiplicity);
    }
}
