#pragma once

#include "bg/kernel.hpp"
#include "bg/quadrature.hpp"
#include "bg/radial.hpp"
#include "bg/report.hpp"
#include "bg/rotation.hpp"
#include "bg/sphere.hpp"
#include "bg/velocity.hpp"

namespace bg {

// d nu_alpha(k) = |k|^alpha dk
struct NuMeasure {
    int n = 3;
    double alpha = 0.0;
};

// P(g,h)(k) = int_{S^{n-1}} g(k+) h(k-) b(khat . omega) d omega. At k = 0 the
// value is the limit along a fixed direction, i.e. g(0) h(0) times the
// angular mass. Kernel endpoint singularities are absorbed into the polar
// rule; radial inputs collapse the azimuth loop.
double operator_P(const VelocityFunction& g, const VelocityFunction& h, const Vec& k,
                  const AngularKernel& kern, const SphereRule& rule);

// 2^{n-2} |S^{n-2}| B(g~,h~)(s) with s = |k|^2: the radial reduction of P.
double radial_reduce_P(const RadialProfile& g, const RadialProfile& h, double s,
                       const XiMeasure& m, const QuadratureSpec& quad = {});

// f*_p: L^p average of f over Haar-sampled rotations, evaluated on |x| only.
// Radial inputs return |f| exactly. The result carries its statistical error
// in mc_error.
VelocityFunction symmetrize(const VelocityFunction& f, double p, const RotationSampler& sampler);

// ||f||_{L^p(d nu_alpha)}. Radial functions reduce to the 1-d weighted norm
// with the (|S^{n-1}|/2)^{1/p} factor; p = inf is an adaptive sup.
double weighted_lp_norm(const VelocityFunction& f, double p, const NuMeasure& m,
                        const QuadratureSpec& quad = {}, int polar_order = 16,
                        int azimuth_count = 32);

// int f(k) P(g,h)(k) dk by nested quadrature (signed).
double pair_with_P(const VelocityFunction& f, const VelocityFunction& g,
                   const VelocityFunction& h, const AngularKernel& kern, const SphereRule& rule,
                   const QuadratureSpec& quad = {});

struct PairingIdentity {
    double lhs = 0.0;  // int f P(g,h)
    double rhs = 0.0;  // Carleman-side double integral
};

// Both sides of the Carleman-type pairing identity, by independent
// quadratures. Requires compactly supported f,g,h and continuous b.
PairingIdentity lemma21_pairing(const VelocityFunction& f, const VelocityFunction& g,
                                const VelocityFunction& h, const AngularKernel& kern,
                                const SphereRule& rule, const QuadratureSpec& quad = {});

// |int f P(g,h)| <= int f*_p P(g*_q, h*_r) for 1/p + 1/q + 1/r = 1.
InequalityReport lemma22_check(const VelocityFunction& f, const VelocityFunction& g,
                               const VelocityFunction& h, double p, double q, double r,
                               const AngularKernel& kern, const SphereRule& rule,
                               const RotationSampler& sampler, const QuadratureSpec& quad = {},
                               double tol = 1e-6);

// ||P(g,h)||_{L^r(nu_alpha)} <= 2^{n-2} |S^{n-2}| beta(-(n+a)/2p, -(n+a)/2q)
// ||g||_p ||h||_q. Throws PreconditionViolation when the constant diverges.
InequalityReport theorem1_check(const VelocityFunction& g, const VelocityFunction& h,
                                const ExponentTriple& e, const NuMeasure& m,
                                const AngularKernel& kern, const SphereRule& rule,
                                const QuadratureSpec& quad = {}, double tol = 1e-4);

}  // namespace bg
