#pragma once

#include <functional>
#include <vector>

namespace bg {

// Tolerances and escalation bounds shared by all quadratures. The error
// estimate is the difference between an order-n and an order-2n rule; orders
// double until the estimate falls below max(abs_tol, rel_tol*|value|) or the
// cap is reached, in which case QuadratureFailure is thrown.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int order = 32;
    int max_order = 2048;

    QuadratureSpec with_order(int o) const {
        QuadratureSpec s = *this;
        s.order = o;
        return s;
    }
    QuadratureSpec relaxed(double rel) const {
        QuadratureSpec s = *this;
        s.rel_tol = rel;
        return s;
    }
};

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre on [-1,1]. Cached.
const GaussRule& gauss_legendre(int order);

// Gauss rule on [0,1] for the weight z^b0 (1-z)^b1, b0,b1 > -1 (Golub-Welsch
// on the Jacobi recurrence). Cached. The weights integrate the weight
// function, i.e. sum(w) = B(b0+1, b1+1).
const GaussRule& gauss_jacobi01(int order, double b0, double b1);

struct IntegralResult {
    double value = 0;
    double error = 0;  // order-doubling estimate
};

using Integrand = std::function<double(double)>;

// integral over [lo,hi] of (z-lo)^g0 * (hi-z)^g1 * f(z), f smooth; the power
// factors are absorbed into the rule. g0 = g1 = 0 is plain Gauss-Legendre.
IntegralResult integrate_jacobi(const Integrand& f, double lo, double hi, double g0, double g1,
                                const QuadratureSpec& spec);

// Plain Gauss-Legendre with escalation.
IntegralResult integrate_gl(const Integrand& f, double lo, double hi, const QuadratureSpec& spec);

// Composite rule over a panel decomposition; each panel escalates on its own.
IntegralResult integrate_panels(const Integrand& f, const std::vector<double>& breakpoints,
                                const QuadratureSpec& spec);

// Panel edges on [lo,hi], geometrically refined toward an endpoint whose
// singular anchor lies just outside the interval. dist_left is the distance
// from lo to its anchor (<=0 or large disables grading on that side);
// likewise dist_right for hi. First panel width matches the anchor distance.
std::vector<double> graded_panels(double lo, double hi, double dist_left, double dist_right,
                                  int max_panels = 64);

// Fixed-order rule application: sum w_i f(x_i) on [lo,hi] for a mapped
// Legendre rule. No escalation; used inside hand-assembled nests.
double apply_gl(const Integrand& f, double lo, double hi, int order);

}  // namespace bg
