#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "bg/kernel.hpp"
#include "bg/quadrature.hpp"
#include "bg/report.hpp"

namespace bg {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Decay { compact, gaussian, power };

// Scalar function on [0, inf). By the squared-radial convention a radial
// f on R^n is f(k) = profile(|k|^2), so "x" here is |k|^2.
//   support_radius  exact zero beyond it (compact decay)
//   decay_rate      gaussian: f ~ e^{-rate*x}; power: |f| ~ x^{-rate}
//   origin_exponent f(x) ~ c x^{e0} as x -> 0+ (may be negative)
//   breakpoints     interior points where eval is not smooth
struct RadialProfile {
    std::function<double(double)> eval;
    double support_radius = kInf;
    Decay decay = Decay::compact;
    double decay_rate = 0.0;
    double origin_exponent = 0.0;
    std::vector<double> breakpoints;

    double operator()(double x) const { return eval(x); }

    static RadialProfile zero();
    static RadialProfile constant(double c);
    static RadialProfile indicator(double a, double b);
    // e^{-x/scale} (x is the squared radial variable)
    static RadialProfile gauss(double scale);
    // c * x^{-e} for x <= cutoff, 0 beyond
    static RadialProfile power(double c, double e, double cutoff);
    // grammar: indicator:<a>,<b> | gauss:<scale> | power:<c>,<e>,<cutoff> |
    //          extremizer:<eps>,<p>  (n, alpha supplied by context)
    static RadialProfile parse(const std::string& text, int n, double alpha);
};

// d sigma(x) = x^{(n+alpha-2)/2} dx on (0,inf)
struct SigmaMeasure {
    int n = 3;
    double alpha = 0.0;
    double weight_exponent() const { return 0.5 * (n + alpha - 2.0); }
};

// Exponent triple with its declared relation. Infinite exponents enter as
// 1/inf = 0.
struct ExponentTriple {
    enum class Relation { holder, young };
    double p = 1, q = 1, r = 1;
    Relation relation = Relation::holder;

    static double inv(double e) { return std::isinf(e) ? 0.0 : 1.0 / e; }
    void validate() const;
    static ExponentTriple holder(double p, double q);
    static ExponentTriple young(double p, double q, double r);
};

// B(g,h)(x) = int_0^1 g(xz) h(x(1-z)) dxi(z). Endpoint singularities of the
// measure and of power-law profiles are absorbed into Jacobi weights;
// support clipping restricts the z-range.
double bilinear_B(const RadialProfile& g, const RadialProfile& h, double x, const XiMeasure& m,
                  const QuadratureSpec& quad = {});

// B(g,h) wrapped as a profile with derived support/decay/exponent metadata.
RadialProfile bilinear_profile(const RadialProfile& g, const RadialProfile& h, const XiMeasure& m,
                               const QuadratureSpec& quad = {});

// ||f||_{L^p(d sigma)}; p = inf is an adaptive sup (compact/gaussian decay
// only). Throws NonIntegrable when the tail cannot be truncated.
double lp_norm_radial(const RadialProfile& f, double p, const SigmaMeasure& m,
                      const QuadratureSpec& quad = {});

// int_lo^hi |f|^p d sigma (the p-th power, not the norm)
double lp_power_integral(const RadialProfile& f, double p, const SigmaMeasure& m, double lo,
                         double hi, const QuadratureSpec& quad = {});

// g_eps(x) = eps^{1/p} x^{-(n+alpha-2 eps)/2p} on (0,1); unit L^p(d sigma)
// norm by construction. Likewise h_eps with q.
std::pair<RadialProfile, RadialProfile> extremizer_pair(double eps, double p, double q, int n,
                                                        double alpha);

// || B(g,h) ||_r <= beta(-(n+alpha)/2p, -(n+alpha)/2q) ||g||_p ||h||_q
InequalityReport lemma23_check(const RadialProfile& g, const RadialProfile& h,
                               const ExponentTriple& e, const XiMeasure& m, const SigmaMeasure& sm,
                               const QuadratureSpec& quad = {}, double tol = 1e-6);

struct SharpnessRow {
    double eps = 0;
    double norm = 0;       // ||B(g_eps,h_eps)||_r
    double beta_eps = 0;   // shifted constant
    double ratio = 0;      // norm / sharp constant
    double piece_low = 0;  // int_0^1 |B|^r dsigma
    double piece_high = 0; // int_1^2 |B|^r dsigma
    bool sandwich_ok = false;
};

struct SharpnessResult {
    double sharp_constant = 0;
    std::vector<SharpnessRow> rows;
};

// Extremizer sweep: per eps the norm, the shifted constant, the sandwich
// beta_eps <= norm <= beta_eps 2^{eps/r}, and the ratio to the sharp constant.
SharpnessResult sharpness_study(const ExponentTriple& e, const XiMeasure& m,
                                const SigmaMeasure& sm,
                                std::vector<double> eps_list = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3},
                                const QuadratureSpec& quad = {});

}  // namespace bg
