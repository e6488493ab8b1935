#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bg/errors.hpp"
#include "bg/quadrature.hpp"
#include "oracles.hpp"

using namespace bg;

TEST_SUITE("quadrature") {

TEST_CASE("Gauss-Legendre integrates monomials exactly up to degree 2n-1") {
    for (int order : {2, 5, 8, 16}) {
        const GaussRule& rule = gauss_legendre(order);
        for (int deg = 0; deg <= 2 * order - 1; ++deg) {
            double acc = 0.0;
            for (int i = 0; i < order; ++i)
                acc += rule.weights[i] * std::pow(rule.nodes[i], deg);
            double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
            CHECK(acc == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
}

TEST_CASE("Gauss-Jacobi weights sum to the Euler Beta of the exponents") {
    for (double g0 : {-0.75, -0.5, 0.0, 0.31, 1.5}) {
        for (double g1 : {-0.9, -0.25, 0.0, 2.0}) {
            const GaussRule& rule = gauss_jacobi01(24, g0, g1);
            double acc = 0.0;
            for (double w : rule.weights) acc += w;
            CHECK(acc == doctest::Approx(oracle::euler_beta(g0 + 1, g1 + 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("Jacobi rule integrates a smooth factor against singular weights") {
    // int_0^1 z^{-3/4} (1-z)^{-1/2} cos(z) dz vs graded-mesh oracle
    auto smooth = [](double z) { return std::cos(z); };
    auto res = integrate_jacobi(smooth, 0.0, 1.0, -0.75, -0.5, {});
    double ref = oracle::graded_beta(-0.75, -0.5, 3, [](double s) {
        return std::cos(0.5 * (s + 1.0));
    });
    CHECK(res.value == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("exponents close to -1 stay stable") {
    double eps = 1e-3;
    auto res = integrate_jacobi([](double) { return 1.0; }, 0.0, 1.0, eps - 1.0, 0.0, {});
    CHECK(res.value == doctest::Approx(1.0 / eps).epsilon(1e-12));
}

TEST_CASE("escalation reports unattainable tolerances") {
    QuadratureSpec tight;
    tight.rel_tol = 1e-15;
    tight.abs_tol = 0.0;
    tight.order = 2;
    tight.max_order = 8;
    auto nasty = [](double z) { return std::sqrt(std::abs(z - 0.3141)); };
    CHECK_THROWS_AS(integrate_gl(nasty, 0.0, 1.0, tight), QuadratureFailure);
}

TEST_CASE("graded panels cover the interval") {
    auto edges = graded_panels(1e-6, 0.5, 1e-6, 0.0);
    CHECK(edges.front() == doctest::Approx(1e-6));
    CHECK(edges.back() == doctest::Approx(0.5));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) CHECK(edges[i] < edges[i + 1]);

    // steep-but-finite integrand: x^{-0.9} on [lo, 1] with anchor at 0
    double lo = 1e-8;
    auto f = [](double x) { return std::pow(x, -0.9); };
    auto panels = graded_panels(lo, 1.0, lo, 0.0);
    auto got = integrate_panels(f, panels, {});
    double exact = (1.0 - std::pow(lo, 0.1)) / 0.1;
    CHECK(got.value == doctest::Approx(exact).epsilon(1e-10));
}

}  // TEST_SUITE
