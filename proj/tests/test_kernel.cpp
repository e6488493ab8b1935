#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include "bg/errors.hpp"
#include "bg/kernel.hpp"
#include "oracles.hpp"

using namespace bg;
using std::numbers::pi;

TEST_SUITE("kernel") {

TEST_CASE("xi density") {
    XiMeasure m3(AngularKernel::constant(1.0), 3);
    CHECK(xi_density(0.5, m3) == doctest::Approx(1.0));

    XiMeasure m2(AngularKernel::constant(1.0), 2);
    CHECK(xi_density(0.25, m2) == doctest::Approx(std::pow(0.25 * 0.75, -0.5)).epsilon(1e-12));

    XiMeasure mp(AngularKernel::endpoint_power(1.0, 0.5, 0.0), 3);
    CHECK(xi_density(0.5, mp) == doctest::Approx(1.0));

    CHECK_THROWS_AS(xi_density(0.0, m3), std::domain_error);
    CHECK_THROWS_AS(xi_density(1.0, m3), std::domain_error);
}

TEST_CASE("finiteness check") {
    XiMeasure m3(AngularKernel::constant(1.0), 3);
    CHECK(finiteness_check(0.0, 0.0, m3) == Finiteness::finite);

    XiMeasure hard(AngularKernel::endpoint_power(1.0, 1.0, 0.0), 3);
    CHECK(finiteness_check(0.0, -0.75, hard) == Finiteness::divergent);

    XiMeasure m2(AngularKernel::constant(1.0), 2);
    CHECK(finiteness_check(-0.5, -0.5, m2) == Finiteness::divergent);
    CHECK(finiteness_check(-0.49, -0.49, m2) == Finiteness::finite);
}

TEST_CASE("beta values against Gamma identities") {
    XiMeasure m3(AngularKernel::constant(1.0), 3);
    CHECK(beta_b(0.0, 0.0, m3).value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta_b(-0.5, -0.5, m3).value == doctest::Approx(pi).epsilon(1e-12));
    CHECK(beta_b(-0.75, -0.75, m3).value ==
          doctest::Approx(std::exp(2.0 * std::lgamma(0.25) - std::lgamma(0.5))).epsilon(1e-12));

    XiMeasure m2(AngularKernel::constant(1.0), 2);
    CHECK(beta_b(0.0, 0.0, m2).value == doctest::Approx(pi).epsilon(1e-12));
}

TEST_CASE("beta against the graded-mesh oracle") {
    XiMeasure m3(AngularKernel::constant(1.0), 3);
    for (double x : {-0.6, -0.2, 0.4}) {
        for (double y : {-0.8, 0.0, 1.2}) {
            double ref = oracle::graded_beta(x, y, 3, [](double) { return 1.0; });
            CHECK(beta_b(x, y, m3).value == doctest::Approx(ref).epsilon(1e-9));
        }
    }
    AngularKernel pk = AngularKernel::endpoint_power(2.0, 0.25, 0.1);
    XiMeasure mp(pk, 3);
    double ref = oracle::graded_beta(-0.3, -0.4, 3, [&](double s) { return pk(s); });
    CHECK(beta_b(-0.3, -0.4, mp).value == doctest::Approx(ref).epsilon(1e-9));

    XiMeasure m2(AngularKernel::constant(0.7), 2);
    double ref2 = oracle::graded_beta(-0.2, -0.3, 2, [](double) { return 0.7; });
    CHECK(beta_b(-0.2, -0.3, m2).value == doctest::Approx(ref2).epsilon(1e-9));
}

TEST_CASE("tabulated kernels integrate through the sine substitution") {
    // table of b(s) = 1 + s^2 sampled densely; compare to the oracle
    std::vector<double> s, b;
    for (int i = 0; i <= 400; ++i) {
        double si = -1.0 + 2.0 * i / 400.0;
        s.push_back(si);
        b.push_back(1.0 + si * si);
    }
    AngularKernel tab = AngularKernel::tabulated(s, b);
    XiMeasure m(tab, 3);
    double ref = oracle::graded_beta(0.0, 0.0, 3, [&](double x) { return tab(x); });
    CHECK(beta_b(0.0, 0.0, m).value == doctest::Approx(ref).epsilon(1e-7));
    CHECK(tab.even());
}

TEST_CASE("beta symmetry for even kernels") {
    AngularKernel even = AngularKernel::endpoint_power(1.0, 0.25, 0.25);
    XiMeasure m(even, 3);
    for (double x : {-0.5, -0.1, 0.3}) {
        for (double y : {-0.6, 0.2}) {
            auto a = beta_b(x, y, m);
            auto b = beta_b(y, x, m);
            CHECK(a.value == doctest::Approx(b.value).epsilon(1e-11));
        }
    }
}

TEST_CASE("beta monotone in each exponent toward the finiteness boundary") {
    XiMeasure m(AngularKernel::constant(1.0), 3);
    double prev = beta_b(0.0, -0.25, m).value;
    for (double x : {-0.25, -0.5, -0.75, -0.9}) {
        double cur = beta_b(x, -0.25, m).value;
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("divergent parameters blow up under mesh refinement") {
    // finiteness says divergent; truncated graded sums must grow without bound
    double coarse = oracle::graded_beta(-1.0, 0.0, 3, [](double) { return 1.0; }, 40);
    double fine = oracle::graded_beta(-1.0, 0.0, 3, [](double) { return 1.0; }, 140);
    CHECK(fine > coarse + 60.0);  // ~ log growth, 100 extra octaves
    XiMeasure m(AngularKernel::constant(1.0), 3);
    CHECK_FALSE(beta_b(-1.0, 0.0, m).finite);
}

TEST_CASE("grad cut-off identity") {
    XiMeasure m3(AngularKernel::constant(1.0), 3);
    auto c3 = grad_cutoff(m3);
    CHECK(c3.value == doctest::Approx(4.0 * pi).epsilon(1e-13));

    XiMeasure m2(AngularKernel::constant(1.0), 2);
    CHECK(grad_cutoff(m2).value == doctest::Approx(2.0 * pi).epsilon(1e-13));

    XiMeasure hard(AngularKernel::endpoint_power(1.0, 2.0, 0.0), 3);
    CHECK_FALSE(grad_cutoff(hard).finite);
}

TEST_CASE("oracle equivalence: beta equals Euler Beta for plain measure") {
    XiMeasure m(AngularKernel::constant(1.0), 3);
    for (double x = -0.9; x <= 0.01; x += 0.15) {
        for (double y = -0.9; y <= 0.01; y += 0.15) {
            double ref = oracle::euler_beta(x + 1.0, y + 1.0);
            CHECK(beta_b(x, y, m).value == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("kernel grammar") {
    auto c = AngularKernel::parse("constant:2.5");
    CHECK(c(0.3) == doctest::Approx(2.5));

    auto p = AngularKernel::parse("power:1,0.25,0.5");
    CHECK(p.a_minus() == doctest::Approx(0.25));
    CHECK(p.a_plus() == doctest::Approx(0.5));
    CHECK(p(0.0) == doctest::Approx(1.0));

    {
        std::ofstream t("kernel_table_test.csv");
        t << "-1,1\n0,2\n1,1\n";
    }
    auto tab = AngularKernel::parse("table:kernel_table_test.csv");
    CHECK(tab(0.5) == doctest::Approx(1.5));
    CHECK(tab(-0.5) == doctest::Approx(1.5));

    CHECK_THROWS_AS(AngularKernel::parse("nonsense:1"), ConfigError);
    CHECK_THROWS_AS(AngularKernel::parse("power:1,2"), ConfigError);
}

TEST_CASE("sphere areas") {
    CHECK(sphere_area(0) == doctest::Approx(2.0));
    CHECK(sphere_area(1) == doctest::Approx(2.0 * pi));
    CHECK(sphere_area(2) == doctest::Approx(4.0 * pi));
}

}  // TEST_SUITE
