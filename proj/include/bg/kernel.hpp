#pragma once

#include <string>
#include <vector>

#include "bg/quadrature.hpp"

namespace bg {

// Angular collision kernel b(s) on [-1,1]. Three forms:
//   constant        b(s) = c
//   endpoint_power  b(s) = c (1-s)^{-a_minus} (1+s)^{-a_plus}
//   tabulated       nonnegative samples, linear interpolation, bounded
// The endpoint exponents drive every finiteness test; tabulated kernels are
// bounded by convention, so theirs are zero.
class AngularKernel {
  public:
    enum class Form { constant, endpoint_power, tabulated };

    static AngularKernel constant(double c);
    static AngularKernel endpoint_power(double c, double a_minus, double a_plus);
    static AngularKernel tabulated(std::vector<double> s, std::vector<double> b);
    static AngularKernel tabulated_from_csv(const std::string& path);

    // grammar: constant:<c> | power:<c>,<a_minus>,<a_plus> | table:<path>
    static AngularKernel parse(const std::string& text);

    double operator()(double s) const;
    Form form() const { return form_; }
    double coefficient() const { return c_; }
    // exponent of the (1-s) blow-up at s=+1
    double a_minus() const { return a_minus_; }
    // exponent of the (1+s) blow-up at s=-1
    double a_plus() const { return a_plus_; }
    bool even() const;

    // b(s) * (1-s)^{a_minus} * (1+s)^{a_plus} with the power cancellation done
    // algebraically; smooth up to the endpoints.
    double smooth_factor(double s) const;

    std::string describe() const;

  private:
    AngularKernel() = default;
    Form form_ = Form::constant;
    double c_ = 1.0;
    double a_minus_ = 0.0;
    double a_plus_ = 0.0;
    std::vector<double> ts_, bs_;
};

// The measure  d xi(z) = b(2z-1) [z(1-z)]^{(n-3)/2} dz  on [0,1].
struct XiMeasure {
    AngularKernel kernel;
    int n = 3;

    XiMeasure(AngularKernel k, int dim);
    // combined endpoint exponent of z^x dxi at z=0 (excluding the z^x factor)
    double exponent_at_zero() const { return 0.5 * (n - 3) - kernel.a_plus(); }
    double exponent_at_one() const { return 0.5 * (n - 3) - kernel.a_minus(); }
};

double xi_density(double z, const XiMeasure& m);

enum class Finiteness { finite, divergent };

// Integrability of z^x (1-z)^y dxi: both endpoint exponents must exceed -1.
Finiteness finiteness_check(double x, double y, const XiMeasure& m);

struct BetaResult {
    bool finite = true;
    double value = 0.0;
    double error = 0.0;
    static BetaResult divergent() { return {false, 0.0, 0.0}; }
};

// beta_b(x,y) = int_0^1 z^x (1-z)^y dxi(z). Divergent outcome if the
// finiteness test fails; otherwise endpoint singularities are absorbed into a
// Gauss-Jacobi weight (constant/power kernels) or removed by z = sin^2(theta)
// (tabulated kernels).
BetaResult beta_b(double x, double y, const XiMeasure& m, const QuadratureSpec& quad = {});

// 2^{n-2} |S^{n-2}| beta_b(0,0), i.e. the total angular mass of b over the
// sphere. Divergent when the cut-off condition fails.
BetaResult grad_cutoff(const XiMeasure& m, const QuadratureSpec& quad = {});

// |S^m| = 2 pi^{(m+1)/2} / Gamma((m+1)/2); |S^0| = 2.
double sphere_area(int m);

}  // namespace bg
