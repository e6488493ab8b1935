#pragma once

#include "bg/kernel.hpp"
#include "bg/quadrature.hpp"
#include "bg/radial.hpp"
#include "bg/report.hpp"
#include "bg/spherical.hpp"
#include "bg/velocity.hpp"

namespace bg {

// B(|u|, uhat.omega) = |u|^lambda b(uhat.omega), hard potentials only.
struct CollisionKernel {
    double lambda = 0.0;
    AngularKernel angular = AngularKernel::constant(1.0);

    CollisionKernel(double lam, AngularKernel b);
};

// L^p_lambda weight 1 + |k|^{p lambda}
struct LambdaNormSpec {
    double p = 1.0;
    double lambda = 0.0;
};

// Q-(g,h)(v) = g(v) * int h(v_*) |v-v_*|^lambda dv_* * int_{S^{n-1}} b
double q_minus(const VelocityFunction& g, const VelocityFunction& h, const Vec& v,
               const CollisionKernel& ck, const QuadratureSpec& quad = {});

// Gain term by the direct (omega-sphere x relative-velocity) integral.
double q_plus_direct(const VelocityFunction& g, const VelocityFunction& h, const Vec& v,
                     const CollisionKernel& ck, const SphereRule& rule,
                     const QuadratureSpec& quad = {});

// Gain term by the Carleman (point x hyperplane) representation; must agree
// with the direct route.
double q_plus_carleman(const VelocityFunction& g, const VelocityFunction& h, const Vec& v,
                       const CollisionKernel& ck, const QuadratureSpec& quad = {});

// || f ||_{L^p_lambda}
double lambda_norm(const VelocityFunction& f, const LambdaNormSpec& spec,
                   const QuadratureSpec& quad = {}, int polar_order = 16, int azimuth_count = 32);

// ||Q+(g,h)||_{L^r} <= 2^{lambda+n-1} |S^{n-2}| beta(-n/2r', -n/2r')
// ||g||_{L^p_lambda} ||h||_{L^q_lambda},  1/p + 1/q = 1 + 1/r.
InequalityReport theorem2_check(const VelocityFunction& g, const VelocityFunction& h,
                                const ExponentTriple& e, const CollisionKernel& ck,
                                const SphereRule& rule, const QuadratureSpec& quad = {},
                                double tol = 1e-3);

}  // namespace bg
