#include "bg/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "bg/errors.hpp"
#include "bg/simd.hpp"

namespace bg {

namespace {

constexpr double kTruncTol = 1e-16;

// composite fixed-order radial rule on [0,R] with light grading toward 0
double radial_composite(const std::function<double(double)>& f, double R, int order) {
    if (!(R > 0.0)) return 0.0;
    static const std::vector<double> splits{0.0, 1.0 / 16.0, 1.0 / 4.0, 1.0 / 2.0, 1.0};
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
        total += apply_gl(f, R * splits[i], R * splits[i + 1], order);
    return total;
}

}  // namespace

double operator_P(const VelocityFunction& g, const VelocityFunction& h, const Vec& k,
                  const AngularKernel& kern, const SphereRule& rule) {
    if (g.n != h.n || g.n != k.n) throw std::invalid_argument("dimension mismatch");
    const int n = k.n;
    double kn = k.norm();
    if (kn == 0.0) {
        BetaResult cut = grad_cutoff(XiMeasure(kern, n));
        if (!cut.finite) throw PreconditionViolation("grad cut-off diverges");
        return g(Vec::zero(n)) * h(Vec::zero(n)) * cut.value;
    }
    bool collapse = g.radial && h.radial;
    auto G = [&](const Vec& omega, double) {
        auto [kp, km] = post_collision_pair(k, omega);
        return g(kp) * h(km);
    };
    return sphere_integrate_kernel(k * (1.0 / kn), kern, n, rule.polar_order(),
                                   rule.azimuth_count(), collapse, G);
}

double radial_reduce_P(const RadialProfile& g, const RadialProfile& h, double s,
                       const XiMeasure& m, const QuadratureSpec& quad) {
    double factor = std::pow(2.0, m.n - 2) * sphere_area(m.n - 2);
    return factor * bilinear_B(g, h, s, m, quad);
}

namespace {

std::mutex rot_cache_mutex;
std::map<std::tuple<int, int, std::uint64_t>, std::shared_ptr<std::vector<Rotation>>> rot_cache;

std::shared_ptr<std::vector<Rotation>> cached_rotations(int n, const RotationSampler& sampler) {
    std::lock_guard<std::mutex> lock(rot_cache_mutex);
    auto key = std::make_tuple(n, sampler.count, sampler.seed);
    auto it = rot_cache.find(key);
    if (it != rot_cache.end()) return it->second;
    auto rots = std::make_shared<std::vector<Rotation>>(haar_rotations(n, sampler));
    rot_cache.emplace(key, rots);
    return rots;
}

// Chebyshev-Lobatto interpolant on [0,R]; barycentric evaluation.
struct ChebInterp {
    double R = 1.0;
    std::vector<double> x, v, w;

    static ChebInterp build(double R, int m, const std::function<double(double)>& f) {
        ChebInterp c;
        c.R = R;
        c.x.resize(m + 1);
        c.v.resize(m + 1);
        c.w.resize(m + 1);
        for (int j = 0; j <= m; ++j) {
            double t = std::cos(std::numbers::pi * j / m);  // [-1,1]
            c.x[j] = 0.5 * R * (1.0 + t);
            c.v[j] = f(c.x[j]);
            c.w[j] = (j == 0 || j == m) ? 0.5 : 1.0;
            if (j % 2 == 1) c.w[j] = -c.w[j];
        }
        return c;
    }

    double operator()(double xq) const {
        double num = 0.0, den = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            double d = xq - x[j];
            if (d == 0.0) return v[j];
            double t = w[j] / d;
            num += t * v[j];
            den += t;
        }
        return num / den;
    }
};

}  // namespace

VelocityFunction symmetrize(const VelocityFunction& f, double p, const RotationSampler& sampler) {
    const int n = f.n;
    if (f.radial) {
        VelocityFunction out = f;
        auto base = f.eval;
        out.eval = [base](const Vec& v) { return std::abs(base(v)); };
        if (f.profile) {
            RadialProfile prof = *f.profile;
            auto pe = f.profile->eval;
            prof.eval = [pe](double x) { return std::abs(pe(x)); };
            out.profile = std::make_shared<RadialProfile>(std::move(prof));
        }
        out.mc_error = 0.0;
        return out;
    }

    double R = f.effective_radius(kTruncTol);
    auto rots = cached_rotations(n, sampler);
    const bool sup_mode = std::isinf(p);
    const double count = static_cast<double>(rots->size());

    double worst_rel_se = 0.0;
    double max_mean = 0.0;
    std::vector<double> samples(rots->size());
    Vec e1 = Vec::axis(n, 0);

    auto node_value = [&](double rho) {
        Vec base = e1 * rho;
        if (sup_mode) {
            double best = 0.0;
            for (const auto& rot : *rots) best = std::max(best, std::abs(f(rot.apply(base))));
            return best;
        }
        for (std::size_t j = 0; j < rots->size(); ++j)
            samples[j] = std::pow(std::abs(f((*rots)[j].apply(base))), p);
        double mean = simd::reduce_sum(samples.data(), samples.size()) / count;
        if (mean > 0.0) {
            for (std::size_t j = 0; j < rots->size(); ++j) {
                double d = samples[j] - mean;
                samples[j] = d * d;
            }
            double var = simd::reduce_sum(samples.data(), samples.size()) / (count - 1.0);
            double se = std::sqrt(var / count);
            if (mean > max_mean) max_mean = mean;
            if (mean > 1e-12 * std::max(max_mean, 1e-300))
                worst_rel_se = std::max(worst_rel_se, se / (p * mean));
        }
        return std::pow(mean, 1.0 / p);
    };

    const int cheb_order = 96;
    ChebInterp interp = ChebInterp::build(R, cheb_order, node_value);

    VelocityFunction out;
    out.n = n;
    out.radial = true;
    out.support_radius = R;
    out.decay = Decay::compact;
    out.mc_error = worst_rel_se;
    auto shared = std::make_shared<ChebInterp>(std::move(interp));
    out.eval = [shared, R](const Vec& v) {
        double rho = v.norm();
        return rho <= R ? std::max(0.0, (*shared)(rho)) : 0.0;
    };
    RadialProfile prof;
    prof.eval = [shared, R](double x) {
        double rho = std::sqrt(std::max(0.0, x));
        return rho <= R ? std::max(0.0, (*shared)(rho)) : 0.0;
    };
    prof.support_radius = R * R;
    prof.decay = Decay::compact;
    out.profile = std::make_shared<RadialProfile>(std::move(prof));
    return out;
}

namespace {

double generic_sup(const VelocityFunction& f, int polar_order, int azimuth_count) {
    double R = f.effective_radius(kTruncTol);
    SphereRule rule(f.n, polar_order, azimuth_count);
    double best = 0.0;
    for (const auto& dir : rule.nodes()) {
        for (int j = 0; j <= 512; ++j) {
            double rho = R * j / 512.0;
            best = std::max(best, std::abs(f(dir * rho)));
        }
    }
    return best;
}

}  // namespace

double weighted_lp_norm(const VelocityFunction& f, double p, const NuMeasure& m,
                        const QuadratureSpec& quad, int polar_order, int azimuth_count) {
    if (std::isinf(p)) {
        if (f.radial && f.profile)
            return lp_norm_radial(*f.profile, p, SigmaMeasure{m.n, m.alpha}, quad);
        return generic_sup(f, polar_order, azimuth_count);
    }
    if (!(p >= 1.0)) throw std::invalid_argument("norm exponent must be >= 1");

    if (f.radial && f.profile) {
        double factor = std::pow(0.5 * sphere_area(m.n - 1), 1.0 / p);
        return factor * lp_norm_radial(*f.profile, p, SigmaMeasure{m.n, m.alpha}, quad);
    }

    double R = f.effective_radius(kTruncTol);
    double wexp = m.alpha + m.n - 1.0;
    if (wexp <= -1.0) throw NonIntegrable("weight not integrable at the origin");

    SphereRule rule(f.n, polar_order, azimuth_count);
    QuadratureSpec piece = quad;
    piece.abs_tol = quad.abs_tol / std::max<std::size_t>(rule.nodes().size(), 1);
    std::vector<double> vals(rule.nodes().size());
    for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
        Vec dir = rule.nodes()[i];
        auto smooth = [&](double rho) { return std::pow(std::abs(f(dir * rho)), p); };
        double first =
            integrate_jacobi(smooth, 0.0, std::min(1.0, R), wexp, 0.0, piece).value;
        double rest = 0.0;
        if (R > 1.0) {
            auto raw = [&](double rho) { return smooth(rho) * std::pow(rho, wexp); };
            std::vector<double> edges{1.0};
            double a = 1.0;
            while (a < R) {
                a = std::min(2.0 * a, R);
                edges.push_back(a);
            }
            rest = integrate_panels(raw, edges, piece).value;
        }
        vals[i] = first + rest;
    }
    double total = simd::dot(rule.weights().data(), vals.data(), vals.size());
    return std::pow(total, 1.0 / p);
}

double pair_with_P(const VelocityFunction& f, const VelocityFunction& g,
                   const VelocityFunction& h, const AngularKernel& kern, const SphereRule& rule,
                   const QuadratureSpec& quad) {
    const int n = f.n;
    double Rf = f.effective_radius(kTruncTol);
    double rg = g.effective_radius(kTruncTol), rh = h.effective_radius(kTruncTol);
    double R = std::min(Rf, std::sqrt(rg * rg + rh * rh));
    if (!(R > 0.0)) return 0.0;

    const int radial_order = std::max(16, quad.order / 2);
    SphereRule outer(n, rule.polar_order(), rule.azimuth_count());
    std::vector<double> vals(outer.nodes().size());
    for (std::size_t i = 0; i < outer.nodes().size(); ++i) {
        Vec dir = outer.nodes()[i];
        auto integrand = [&](double rho) {
            Vec k = dir * rho;
            double fv = f(k);
            if (fv == 0.0) return 0.0;
            return fv * operator_P(g, h, k, kern, rule) * std::pow(rho, n - 1);
        };
        vals[i] = radial_composite(integrand, R, radial_order);
    }
    return simd::dot(outer.weights().data(), vals.data(), vals.size());
}

PairingIdentity lemma21_pairing(const VelocityFunction& f, const VelocityFunction& g,
                                const VelocityFunction& h, const AngularKernel& kern,
                                const SphereRule& rule, const QuadratureSpec& quad) {
    const int n = f.n;
    if (kern.form() == AngularKernel::Form::endpoint_power &&
        (kern.a_minus() != 0.0 || kern.a_plus() != 0.0))
        throw PreconditionViolation("pairing identity requires continuous b");
    if (!std::isfinite(f.support_radius) || !std::isfinite(g.support_radius) ||
        !std::isfinite(h.support_radius))
        throw PreconditionViolation("pairing identity requires compact supports");

    PairingIdentity out;
    out.lhs = pair_with_P(f, g, h, kern, rule, quad);

    const double Rg = g.support_radius;
    const double Rz = std::min(h.support_radius, f.support_radius);
    const int radial_order = std::max(16, quad.order / 2);
    const int phi_count = std::max(16, rule.azimuth_count());

    SphereRule outer(n, rule.polar_order(), rule.azimuth_count());

    auto inner_plane = [&](const Vec& x, double rho) {
        Vec e1, e2;
        complete_frame(x * (1.0 / rho), e1, e2);
        double rho2 = rho * rho;
        if (n == 2) {
            auto along = [&](double sigma) {
                double s2 = rho2 + sigma * sigma;
                double bval = kern((2.0 * rho2 / s2) - 1.0);
                return (f(x + e1 * sigma) * h(e1 * sigma) + f(x - e1 * sigma) * h(-(e1 * sigma))) *
                       bval;
            };
            auto edges = graded_panels(0.0, Rz, std::min(rho, 0.2 * Rz), 0.0);
            double total = 0.0;
            for (std::size_t i = 0; i + 1 < edges.size(); ++i)
                total += apply_gl(along, edges[i], edges[i + 1], radial_order);
            return total;
        }
        double wphi = 2.0 * std::numbers::pi / phi_count;
        auto ring = [&](double sigma) {
            double s2 = rho2 + sigma * sigma;
            double bval = kern((2.0 * rho2 / s2) - 1.0);
            double over = std::sqrt(s2);
            double acc = 0.0;
            for (int j = 0; j < phi_count; ++j) {
                double phi = wphi * (j + 0.5);
                Vec z = e1 * (sigma * std::cos(phi)) + e2 * (sigma * std::sin(phi));
                acc += f(x + z) * h(z);
            }
            return acc * wphi * bval * sigma / over;
        };
        auto edges = graded_panels(0.0, Rz, std::min(rho, 0.2 * Rz), 0.0);
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            total += apply_gl(ring, edges[i], edges[i + 1], radial_order);
        return total;
    };

    std::vector<double> vals(outer.nodes().size());
    for (std::size_t i = 0; i < outer.nodes().size(); ++i) {
        Vec dir = outer.nodes()[i];
        auto integrand = [&](double rho) {
            Vec x = dir * rho;
            double gv = g(x);
            if (gv == 0.0) return 0.0;
            return gv * std::pow(rho, n - 2) * inner_plane(x, rho);
        };
        vals[i] = radial_composite(integrand, Rg, radial_order);
    }
    out.rhs = std::pow(2.0, n - 1) *
              simd::dot(outer.weights().data(), vals.data(), vals.size());
    return out;
}

InequalityReport lemma22_check(const VelocityFunction& f, const VelocityFunction& g,
                               const VelocityFunction& h, double p, double q, double r,
                               const AngularKernel& kern, const SphereRule& rule,
                               const RotationSampler& sampler, const QuadratureSpec& quad,
                               double tol) {
    auto inv = [](double e) { return std::isinf(e) ? 0.0 : 1.0 / e; };
    if (std::abs(inv(p) + inv(q) + inv(r) - 1.0) > 1e-12)
        throw std::invalid_argument("lemma 2.2 needs 1/p + 1/q + 1/r = 1");

    InequalityReport rep;
    rep.name = "lemma2.2";
    rep.n = f.n;
    rep.p = p;
    rep.q = q;
    rep.r = r;
    rep.kernel = kern.describe();
    rep.tolerance = tol;
    rep.seed = sampler.seed;
    rep.quad_order = quad.order;

    rep.lhs = std::abs(pair_with_P(f, g, h, kern, rule, quad));

    VelocityFunction fs = symmetrize(f, p, sampler);
    VelocityFunction gs = symmetrize(g, q, sampler);
    VelocityFunction hs = symmetrize(h, r, sampler);
    rep.mc_margin = 3.0 * (fs.mc_error + gs.mc_error + hs.mc_error) + 1e-6;

    double rgs = gs.effective_radius(kTruncTol), rhs_r = hs.effective_radius(kTruncTol);
    double R = std::min(fs.effective_radius(kTruncTol),
                        std::sqrt(rgs * rgs + rhs_r * rhs_r));
    const int n = f.n;
    const int radial_order = std::max(24, quad.order / 2);
    auto integrand = [&](double rho) {
        Vec k = Vec::axis(n, 0) * rho;
        double fv = fs(k);
        if (fv == 0.0) return 0.0;
        return fv * operator_P(gs, hs, k, kern, rule) * std::pow(rho, n - 1);
    };
    double rhs_val = sphere_area(n - 1) * radial_composite(integrand, R, radial_order);

    rep.constant = rhs_val;
    rep.finalize();
    return rep;
}

InequalityReport theorem1_check(const VelocityFunction& g, const VelocityFunction& h,
                                const ExponentTriple& e, const NuMeasure& m,
                                const AngularKernel& kern, const SphereRule& rule,
                                const QuadratureSpec& quad, double tol) {
    e.validate();
    if (e.relation != ExponentTriple::Relation::holder)
        throw std::invalid_argument("theorem 1 takes a Holder-type triple");
    const int n = m.n;
    XiMeasure xi(kern, n);
    double xg = -0.5 * (n + m.alpha) * ExponentTriple::inv(e.p);
    double yh = -0.5 * (n + m.alpha) * ExponentTriple::inv(e.q);
    if (finiteness_check(xg, yh, xi) == Finiteness::divergent)
        throw PreconditionViolation("divergent beta");

    InequalityReport rep;
    rep.name = "theorem1";
    rep.n = n;
    rep.p = e.p;
    rep.q = e.q;
    rep.r = e.r;
    rep.alpha = m.alpha;
    rep.kernel = kern.describe();
    rep.tolerance = tol;
    rep.quad_order = quad.order;

    rep.constant = std::pow(2.0, n - 2) * sphere_area(n - 2) * beta_b(xg, yh, xi, quad).value;
    rep.norms.emplace_back("g_p", weighted_lp_norm(g, e.p, m, quad));
    rep.norms.emplace_back("h_q", weighted_lp_norm(h, e.q, m, quad));

    // ||P(g,h)||_{L^r(nu)} via the operator route
    VelocityFunction Pgh;
    Pgh.n = n;
    auto gp = g, hp = h;
    auto kr = kern;
    SphereRule rl = rule;
    Pgh.eval = [gp, hp, kr, rl](const Vec& k) { return operator_P(gp, hp, k, kr, rl); };
    if (g.radial && h.radial) {
        Pgh.radial = true;
        RadialProfile prof;
        prof.eval = [gp, hp, kr, rl, n](double x) {
            Vec k = Vec::axis(n, 0) * std::sqrt(std::max(0.0, x));
            return operator_P(gp, hp, k, kr, rl);
        };
        bool cg = std::isfinite(g.support_radius), ch = std::isfinite(h.support_radius);
        if (cg && ch) {
            double s2 = g.support_radius * g.support_radius + h.support_radius * h.support_radius;
            prof.support_radius = s2;
            prof.decay = Decay::compact;
            Pgh.support_radius = std::sqrt(s2);
            Pgh.decay = Decay::compact;
            prof.breakpoints = {g.support_radius * g.support_radius,
                                h.support_radius * h.support_radius};
            std::sort(prof.breakpoints.begin(), prof.breakpoints.end());
        } else {
            prof.decay = Decay::gaussian;
            double rg = g.decay == Decay::gaussian ? g.decay_rate : kInf;
            double rh2 = h.decay == Decay::gaussian ? h.decay_rate : kInf;
            prof.decay_rate = std::min(rg, rh2);
            Pgh.decay = Decay::gaussian;
            Pgh.decay_rate = prof.decay_rate;
        }
        Pgh.profile = std::make_shared<RadialProfile>(std::move(prof));
    } else {
        Pgh.support_radius = std::isfinite(g.support_radius) && std::isfinite(h.support_radius)
                                 ? std::hypot(g.support_radius, h.support_radius)
                                 : kInf;
        Pgh.decay = g.decay == Decay::gaussian || h.decay == Decay::gaussian ? Decay::gaussian
                                                                             : Decay::compact;
        Pgh.decay_rate = std::min(g.decay == Decay::gaussian ? g.decay_rate : kInf,
                                  h.decay == Decay::gaussian ? h.decay_rate : kInf);
    }
    QuadratureSpec norm_quad = quad.relaxed(std::max(quad.rel_tol, 1e-9));
    rep.lhs = weighted_lp_norm(Pgh, e.r, m, norm_quad);
    rep.finalize();
    return rep;
}

}  // namespace bg
