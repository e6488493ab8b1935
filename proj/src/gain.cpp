#include "bg/gain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bg/errors.hpp"
#include "bg/simd.hpp"

namespace bg {

namespace {

constexpr double kTruncTol = 1e-16;

// int_0^R F(rho) rho^{wexp} drho, fixed orders: a Jacobi panel at the origin
// absorbing the fractional weight, then geometric Gauss-Legendre panels.
double radial_weighted_fixed(const std::function<double(double)>& F, double R, double wexp,
                             int order) {
    if (!(R > 0.0)) return 0.0;
    double c = R / 8.0;
    const GaussRule& jrule = gauss_jacobi01(order, wexp, 0.0);
    double first = 0.0;
    {
        std::vector<double> vals(order);
        for (int i = 0; i < order; ++i) vals[i] = F(c * jrule.nodes[i]);
        first = std::pow(c, wexp + 1.0) *
                simd::dot(jrule.weights.data(), vals.data(), static_cast<std::size_t>(order));
    }
    auto raw = [&](double rho) { return F(rho) * std::pow(rho, wexp); };
    double rest = 0.0;
    double a = c;
    while (a < R) {
        double b = std::min(2.0 * a, R);
        rest += apply_gl(raw, a, b, order);
        a = b;
    }
    return first + rest;
}

}  // namespace

CollisionKernel::CollisionKernel(double lam, AngularKernel b) : lambda(lam), angular(std::move(b)) {
    if (!(lam >= 0.0)) throw std::invalid_argument("hard potentials require lambda >= 0");
}

double q_minus(const VelocityFunction& g, const VelocityFunction& h, const Vec& v,
               const CollisionKernel& ck, const QuadratureSpec& quad) {
    const int n = g.n;
    double gv = g(v);
    if (gv == 0.0) return 0.0;
    BetaResult cut = grad_cutoff(XiMeasure(ck.angular, n), quad);
    if (!cut.finite) throw NonIntegrable("grad cut-off diverges");

    // int h(v + w) |w|^lambda dw in polar form around v
    double Rw = v.norm() + h.effective_radius(kTruncTol);
    const int order = std::max(24, quad.order);
    SphereRule sph(n, order, n == 3 ? 2 * order : 1);
    std::vector<double> vals(sph.nodes().size());
    for (std::size_t i = 0; i < sph.nodes().size(); ++i) {
        Vec dir = sph.nodes()[i];
        auto F = [&](double rho) { return h(v + dir * rho); };
        vals[i] = radial_weighted_fixed(F, Rw, ck.lambda + n - 1.0, order);
    }
    double inner = simd::dot(sph.weights().data(), vals.data(), vals.size());
    return gv * inner * cut.value;
}

double q_plus_direct(const VelocityFunction& g, const VelocityFunction& h, const Vec& v,
                     const CollisionKernel& ck, const SphereRule& rule,
                     const QuadratureSpec& quad) {
    const int n = g.n;
    const AngularKernel& kern = ck.angular;
    double rg = g.effective_radius(kTruncTol), rh = h.effective_radius(kTruncTol);
    double Ru = v.norm() + std::hypot(rg, rh) + 1e-12;
    const int polar = rule.polar_order();
    const int azim = rule.azimuth_count();
    const int rad_order = std::max(24, quad.order / 2);
    const bool radial_pair = g.radial && h.radial;
    const bool vzero = v.norm() == 0.0;

    auto inner_sphere = [&](const Vec& udir, double ru) {
        Vec V = v - udir * (0.5 * ru);
        bool collapse = radial_pair && vzero;
        auto G = [&](const Vec& omega, double) {
            Vec half = omega * (0.5 * ru);
            return g(V + half) * h(V - half);
        };
        return sphere_integrate_kernel(udir, kern, n, polar, azim, collapse, G);
    };

    if (radial_pair) {
        Vec axis = vzero ? Vec::axis(n, 0) : v * (1.0 / v.norm());
        AngularKernel one = AngularKernel::constant(1.0);
        auto F = [&](const Vec& udir, double) {
            return radial_weighted_fixed([&](double ru) { return inner_sphere(udir, ru); }, Ru,
                                         ck.lambda + n - 1.0, rad_order);
        };
        return sphere_integrate_kernel(axis, one, n, polar, azim, true, F);
    }

    SphereRule outer(n, polar, azim);
    std::vector<double> vals(outer.nodes().size());
    for (std::size_t i = 0; i < outer.nodes().size(); ++i) {
        Vec udir = outer.nodes()[i];
        vals[i] = radial_weighted_fixed([&](double ru) { return inner_sphere(udir, ru); }, Ru,
                                        ck.lambda + n - 1.0, rad_order);
    }
    return simd::dot(outer.weights().data(), vals.data(), vals.size());
}

namespace {

// Inner hyperplane integral of the Carleman representation at the point x:
//   int_{x.z=0} h(z+v) Phi(|x+z|)/|x+z|^{n-2} b(2|x|^2/|x+z|^2 - 1) dpi_z
// The kernel's s=+1 singularity sits at sigma=0 with exponent -2 a_minus and
// is absorbed into a Jacobi panel.
double carleman_plane(const VelocityFunction& h, const Vec& v, const Vec& x, double rho,
                      double lambda, const AngularKernel& kern, double Rz, int rad_order,
                      int phi_count) {
    const int n = x.n;
    Vec e1, e2;
    complete_frame(x * (1.0 / rho), e1, e2);
    const double rho2 = rho * rho;
    const double am = kern.a_minus(), ap = kern.a_plus();
    const double kc = kern.form() == AngularKernel::Form::endpoint_power
                          ? kern.coefficient() * std::pow(2.0, -am - ap)
                          : 1.0;
    const bool power = kern.form() == AngularKernel::Form::endpoint_power;

    // ring value excluding the sigma Jacobian and the absorbed singular power
    auto ring_smooth = [&](double sigma) {
        double s2 = rho2 + sigma * sigma;
        double w;
        if (power) {
            // b = kc sigma^{-2am} rho^{-2ap} s^{2am+2ap}
            w = kc * std::pow(rho, -2.0 * ap) * std::pow(s2, am + ap) *
                std::pow(s2, 0.5 * (lambda - (n - 2)));
        } else {
            double arg = 2.0 * rho2 / s2 - 1.0;
            w = kern(arg) * std::pow(s2, 0.5 * (lambda - (n - 2)));
        }
        if (n == 2) {
            Vec z = e1 * sigma;
            return (h(z + v) + h(v - z)) * w;
        }
        double acc = 0.0;
        double wphi = 2.0 * std::numbers::pi / phi_count;
        for (int j = 0; j < phi_count; ++j) {
            double phi = wphi * (j + 0.5);
            Vec z = e1 * (sigma * std::cos(phi)) + e2 * (sigma * std::sin(phi));
            acc += h(z + v);
        }
        return acc * wphi * w;
    };

    // sigma weight: sigma^{n-2} Jacobian times sigma^{-2 a_minus} from b
    double wexp = (n - 2.0) - 2.0 * am * (power ? 1.0 : 0.0);
    if (wexp <= -1.0) throw NonIntegrable("kernel too singular for the Carleman plane integral");

    double c = std::min(rho, Rz / 2.0);
    double total = 0.0;
    if (c > 0.0) {
        const GaussRule& jr = gauss_jacobi01(rad_order, wexp, 0.0);
        std::vector<double> vals(rad_order);
        for (int i = 0; i < rad_order; ++i) vals[i] = ring_smooth(c * jr.nodes[i]);
        total = std::pow(c, wexp + 1.0) *
                simd::dot(jr.weights.data(), vals.data(), static_cast<std::size_t>(rad_order));
    }
    auto raw = [&](double sigma) { return ring_smooth(sigma) * std::pow(sigma, wexp); };
    double a = c;
    while (a < Rz) {
        double b = std::min(2.0 * a, Rz);
        total += apply_gl(raw, a, b, rad_order);
        a = b;
    }
    return total;
}

}  // namespace

double q_plus_carleman(const VelocityFunction& g, const VelocityFunction& h, const Vec& v,
                       const CollisionKernel& ck, const QuadratureSpec& quad) {
    const int n = g.n;
    const AngularKernel& kern = ck.angular;
    const double Rx = v.norm() + g.effective_radius(kTruncTol);
    const double Rz = v.norm() + h.effective_radius(kTruncTol);
    const int rad_order = std::max(20, quad.order / 2);
    const int polar = std::max(16, quad.order / 2);
    const int phi_count = std::max(16, quad.order / 2);
    const bool radial_pair = g.radial && h.radial;
    const bool vzero = v.norm() == 0.0;

    // x-integrand at distance rho along direction xdir, Jacobian rho^{n-2}
    // (the 1/|x| absorbed)
    auto shell = [&](const Vec& xdir, double rho) {
        Vec x = xdir * rho;
        double gv = g(x + v);
        if (gv == 0.0 && std::isfinite(g.support_radius)) return 0.0;
        return gv * carleman_plane(h, v, x, rho, ck.lambda, kern, Rz, rad_order, phi_count);
    };

    double outer;
    AngularKernel one = AngularKernel::constant(1.0);
    if (radial_pair) {
        Vec axis = vzero ? Vec::axis(n, 0) : v * (1.0 / v.norm());
        auto F = [&](const Vec& xdir, double) {
            return radial_weighted_fixed([&](double rho) { return shell(xdir, rho); }, Rx,
                                         n - 2.0, rad_order);
        };
        outer = sphere_integrate_kernel(axis, one, n, polar, 1, true, F);
    } else {
        SphereRule sph(n, polar, 2 * polar);
        std::vector<double> vals(sph.nodes().size());
        for (std::size_t i = 0; i < sph.nodes().size(); ++i) {
            Vec xdir = sph.nodes()[i];
            vals[i] = radial_weighted_fixed([&](double rho) { return shell(xdir, rho); }, Rx,
                                            n - 2.0, rad_order);
        }
        outer = simd::dot(sph.weights().data(), vals.data(), vals.size());
    }
    return std::pow(2.0, n - 1) * outer;
}

double lambda_norm(const VelocityFunction& f, const LambdaNormSpec& spec,
                   const QuadratureSpec& quad, int polar_order, int azimuth_count) {
    const int n = f.n;
    if (!(spec.lambda >= 0.0)) throw std::invalid_argument("lambda weight requires lambda >= 0");
    if (std::isinf(spec.p)) {
        // limiting weight max(1, |k|^lambda)
        if (f.radial && f.profile) {
            RadialProfile mod = *f.profile;
            auto base = f.profile->eval;
            double lam = spec.lambda;
            mod.eval = [base, lam](double x) {
                return std::abs(base(x)) * std::max(1.0, std::pow(x, 0.5 * lam));
            };
            return lp_norm_radial(mod, kInf, SigmaMeasure{n, 0.0}, quad);
        }
        throw PreconditionViolation("sup lambda-norm implemented for radial functions");
    }
    if (!(spec.p >= 1.0)) throw std::invalid_argument("norm exponent must be >= 1");

    if (f.radial && f.profile) {
        double p0 = lp_power_integral(*f.profile, spec.p, SigmaMeasure{n, 0.0}, 0.0, kInf, quad);
        double pl = spec.lambda == 0.0
                        ? p0
                        : lp_power_integral(*f.profile, spec.p,
                                            SigmaMeasure{n, spec.p * spec.lambda}, 0.0, kInf, quad);
        return std::pow(0.5 * sphere_area(n - 1) * (p0 + pl), 1.0 / spec.p);
    }

    double R = f.effective_radius(kTruncTol);
    SphereRule rule(n, polar_order, azimuth_count);
    const int order = std::max(24, quad.order / 2);
    std::vector<double> vals(rule.nodes().size());
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        Vec dir = rule.nodes()[i];
        auto F = [&](double rho) {
            double a = std::abs(f(dir * rho));
            return std::pow(a, spec.p) * (1.0 + std::pow(rho, spec.p * spec.lambda));
        };
        vals[i] = radial_weighted_fixed(F, R, n - 1.0, order);
    }
    double total = simd::dot(rule.weights().data(), vals.data(), vals.size());
    return std::pow(total, 1.0 / spec.p);
}

InequalityReport theorem2_check(const VelocityFunction& g, const VelocityFunction& h,
                                const ExponentTriple& e, const CollisionKernel& ck,
                                const SphereRule& rule, const QuadratureSpec& quad, double tol) {
    e.validate();
    if (e.relation != ExponentTriple::Relation::young)
        throw std::invalid_argument("theorem 2 takes a Young-type triple");
    const int n = g.n;
    XiMeasure xi(ck.angular, n);

    double inv_rp = 1.0 - ExponentTriple::inv(e.r);  // 1/r'
    double xe = -0.5 * n * inv_rp;
    if (finiteness_check(xe, xe, xi) == Finiteness::divergent)
        throw PreconditionViolation("divergent beta at (-n/2r', -n/2r')");

    InequalityReport rep;
    rep.name = "theorem2";
    rep.n = n;
    rep.p = e.p;
    rep.q = e.q;
    rep.r = e.r;
    rep.lambda = ck.lambda;
    rep.kernel = ck.angular.describe();
    rep.tolerance = tol;
    rep.quad_order = quad.order;

    rep.constant = std::pow(2.0, ck.lambda + n - 1) * sphere_area(n - 2) *
                   beta_b(xe, xe, xi, quad).value;
    rep.norms.emplace_back("g_p_lambda", lambda_norm(g, {e.p, ck.lambda}, quad));
    rep.norms.emplace_back("h_q_lambda", lambda_norm(h, {e.q, ck.lambda}, quad));

    // ||Q+(g,h)||_{L^r} by Carleman evaluation on a radial sampling profile
    VelocityFunction Q;
    Q.n = n;
    auto gp = g, hp = h;
    CollisionKernel ckc = ck;
    QuadratureSpec eval_quad = quad;
    Q.eval = [gp, hp, ckc, eval_quad](const Vec& v) {
        return q_plus_carleman(gp, hp, v, ckc, eval_quad);
    };
    bool cg = std::isfinite(g.support_radius), chh = std::isfinite(h.support_radius);
    if (cg && chh) {
        Q.support_radius = std::hypot(g.support_radius, h.support_radius);
        Q.decay = Decay::compact;
    } else {
        Q.decay = Decay::gaussian;
        Q.decay_rate = std::min(g.decay == Decay::gaussian ? g.decay_rate : kInf,
                                h.decay == Decay::gaussian ? h.decay_rate : kInf);
    }
    if (g.radial && h.radial) {
        Q.radial = true;
        RadialProfile prof;
        auto qe = Q.eval;
        prof.eval = [qe, n](double x) {
            return qe(Vec::axis(n, 0) * std::sqrt(std::max(0.0, x)));
        };
        prof.support_radius = std::isfinite(Q.support_radius)
                                  ? Q.support_radius * Q.support_radius
                                  : kInf;
        prof.decay = Q.decay;
        prof.decay_rate = Q.decay_rate;
        Q.profile = std::make_shared<RadialProfile>(std::move(prof));
    }
    QuadratureSpec norm_quad = quad;
    norm_quad.rel_tol = std::max(quad.rel_tol, 1e-7);
    norm_quad.order = std::max(16, quad.order / 2);
    rep.lhs = weighted_lp_norm(Q, e.r, NuMeasure{n, 0.0}, norm_quad, rule.polar_order(),
                               rule.azimuth_count());
    rep.finalize();
    return rep;
}

}  // namespace bg
