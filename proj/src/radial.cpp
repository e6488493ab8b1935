#include "bg/radial.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "bg/errors.hpp"

namespace bg {

namespace {

std::vector<double> parse_csv_doubles(const std::string& rest) {
    std::istringstream args(rest);
    std::string tok;
    std::vector<double> v;
    while (std::getline(args, tok, ',')) v.push_back(std::stod(tok));
    return v;
}

}  // namespace

RadialProfile RadialProfile::zero() {
    RadialProfile f;
    f.eval = [](double) { return 0.0; };
    f.support_radius = 0.0;
    return f;
}

RadialProfile RadialProfile::constant(double c) {
    RadialProfile f;
    f.eval = [c](double) { return c; };
    f.support_radius = kInf;
    f.decay = Decay::power;
    f.decay_rate = 0.0;
    return f;
}

RadialProfile RadialProfile::indicator(double a, double b) {
    if (!(0.0 <= a && a < b)) throw std::invalid_argument("indicator needs 0 <= a < b");
    RadialProfile f;
    f.eval = [a, b](double x) { return (x >= a && x <= b) ? 1.0 : 0.0; };
    f.support_radius = b;
    if (a > 0.0) f.breakpoints = {a};
    return f;
}

RadialProfile RadialProfile::gauss(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("gauss scale must be positive");
    RadialProfile f;
    double rate = 1.0 / scale;
    f.eval = [rate](double x) { return std::exp(-rate * x); };
    f.decay = Decay::gaussian;
    f.decay_rate = rate;
    return f;
}

RadialProfile RadialProfile::power(double c, double e, double cutoff) {
    if (!(cutoff > 0.0)) throw std::invalid_argument("power profile needs positive cutoff");
    RadialProfile f;
    f.eval = [c, e, cutoff](double x) { return x <= cutoff ? c * std::pow(x, -e) : 0.0; };
    f.support_radius = cutoff;
    f.origin_exponent = -e;
    return f;
}

RadialProfile RadialProfile::parse(const std::string& text, int n, double alpha) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("bad profile spec: " + text);
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        auto v = parse_csv_doubles(rest);
        if (head == "indicator" && v.size() == 2) return indicator(v[0], v[1]);
        if (head == "gauss" && v.size() == 1) return gauss(v[0]);
        if (head == "power" && v.size() == 3) return power(v[0], v[1], v[2]);
        if (head == "extremizer" && v.size() == 2)
            return extremizer_pair(v[0], v[1], v[1], n, alpha).first;
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad profile spec '") + text + "': " + e.what());
    }
    throw ConfigError("unknown profile spec: " + text);
}

void ExponentTriple::validate() const {
    auto bad = [](double e) { return !(e >= 1.0); };
    if (bad(p) || bad(q) || bad(r)) throw std::invalid_argument("exponents must lie in [1, inf]");
    double lhs = inv(p) + inv(q);
    double rhs = relation == Relation::holder ? inv(r) : 1.0 + inv(r);
    if (std::abs(lhs - rhs) > 1e-12)
        throw std::invalid_argument("exponent relation violated");
    if (relation == Relation::holder && lhs > 1.0 + 1e-12)
        throw std::invalid_argument("Holder triple needs 1/p + 1/q <= 1");
}

ExponentTriple ExponentTriple::holder(double p, double q) {
    ExponentTriple e;
    e.p = p;
    e.q = q;
    double s = inv(p) + inv(q);
    e.r = s == 0.0 ? kInf : 1.0 / s;
    e.relation = Relation::holder;
    e.validate();
    return e;
}

ExponentTriple ExponentTriple::young(double p, double q, double r) {
    ExponentTriple e;
    e.p = p;
    e.q = q;
    e.r = r;
    e.relation = Relation::young;
    e.validate();
    return e;
}

namespace {

struct ClipRange {
    double lo = 0.0, hi = 1.0;
    bool empty = false;
};

ClipRange clip_range(const RadialProfile& g, const RadialProfile& h, double x) {
    ClipRange c;
    if (std::isfinite(g.support_radius)) c.hi = std::min(1.0, g.support_radius / x);
    if (std::isfinite(h.support_radius)) c.lo = std::max(0.0, 1.0 - h.support_radius / x);
    if (!(c.lo < c.hi)) c.empty = true;
    return c;
}

}  // namespace

double bilinear_B(const RadialProfile& g, const RadialProfile& h, double x, const XiMeasure& m,
                  const QuadratureSpec& quad) {
    if (!(x >= 0.0)) throw std::domain_error("bilinear operator defined for x >= 0");
    if (x == 0.0) {
        BetaResult mass = beta_b(0.0, 0.0, m, quad);
        if (!mass.finite) throw PreconditionViolation("xi measure has infinite mass");
        return g(0.0) * h(0.0) * mass.value;
    }

    ClipRange c = clip_range(g, h, x);
    if (c.empty) return 0.0;

    const double E0 = m.exponent_at_zero();
    const double E1 = m.exponent_at_one();
    const auto& kern = m.kernel;
    const double kc = std::pow(2.0, -(kern.a_minus() + kern.a_plus()));

    // raw integrand split as  z^{E0} (1-z)^{E1} * shape(z)
    auto shape = [&](double z) {
        return g(x * z) * h(x * (1.0 - z)) * kern.smooth_factor(2.0 * z - 1.0) * kc;
    };
    auto raw = [&](double z) {
        return shape(z) * std::pow(z, E0) * std::pow(1.0 - z, E1);
    };

    const double eg = g.origin_exponent;
    const double eh = h.origin_exponent;

    if (c.lo == 0.0 && c.hi == 1.0) {
        auto f = [&](double z) {
            double v = kern.smooth_factor(2.0 * z - 1.0) * kc;
            double gv = g(x * z);
            double hv = h(x * (1.0 - z));
            if (eg != 0.0) gv *= std::pow(z, -eg);
            if (eh != 0.0) hv *= std::pow(1.0 - z, -eh);
            return gv * hv * v;
        };
        return integrate_jacobi(f, 0.0, 1.0, E0 + eg, E1 + eh, quad).value;
    }

    QuadratureSpec piece = quad;
    piece.abs_tol = 0.5 * quad.abs_tol;
    double mid = 0.5 * (c.lo + c.hi);
    double total = 0.0;

    if (c.lo == 0.0) {
        auto f = [&](double z) {
            double gv = g(x * z);
            if (eg != 0.0) gv *= std::pow(z, -eg);
            return gv * h(x * (1.0 - z)) * kern.smooth_factor(2.0 * z - 1.0) * kc *
                   std::pow(1.0 - z, E1);
        };
        total += integrate_jacobi(f, 0.0, mid, E0 + eg, 0.0, piece).value;
    } else {
        auto edges = graded_panels(c.lo, mid, c.lo, 0.0);
        total += integrate_panels(raw, edges, piece).value;
    }

    if (c.hi == 1.0) {
        auto f = [&](double z) {
            double hv = h(x * (1.0 - z));
            if (eh != 0.0) hv *= std::pow(1.0 - z, -eh);
            return g(x * z) * hv * kern.smooth_factor(2.0 * z - 1.0) * kc * std::pow(z, E0);
        };
        total += integrate_jacobi(f, mid, 1.0, 0.0, E1 + eh, piece).value;
    } else {
        auto edges = graded_panels(mid, c.hi, 0.0, 1.0 - c.hi);
        total += integrate_panels(raw, edges, piece).value;
    }
    return total;
}

RadialProfile bilinear_profile(const RadialProfile& g, const RadialProfile& h, const XiMeasure& m,
                               const QuadratureSpec& quad) {
    RadialProfile out;
    out.eval = [g, h, m, quad](double x) { return bilinear_B(g, h, x, m, quad); };

    double sg = g.support_radius, sh = h.support_radius;
    if (std::isfinite(sg) && std::isfinite(sh)) {
        out.decay = Decay::compact;
        out.support_radius = sg + sh;
    } else {
        out.support_radius = kInf;
        if (g.decay == Decay::gaussian || h.decay == Decay::gaussian) {
            out.decay = Decay::gaussian;
            double rg = g.decay == Decay::gaussian ? g.decay_rate : kInf;
            double rh = h.decay == Decay::gaussian ? h.decay_rate : kInf;
            out.decay_rate = std::min(rg, rh);
        } else {
            out.decay = Decay::power;
            out.decay_rate = g.decay_rate + h.decay_rate;
        }
    }
    out.origin_exponent = g.origin_exponent + h.origin_exponent;

    std::set<double> bps;
    auto add = [&](double v) {
        if (v > 0.0 && std::isfinite(v) && (!std::isfinite(out.support_radius) || v < out.support_radius))
            bps.insert(v);
    };
    add(sg);
    add(sh);
    for (double b : g.breakpoints) add(b);
    for (double b : h.breakpoints) add(b);
    out.breakpoints.assign(bps.begin(), bps.end());
    return out;
}

namespace {

// truncation radius for integrable profiles: double until the next octave
// contributes less than the tolerance
struct TailState {
    double radius = 0.0;
    bool converged = false;
};

double profile_sup(const RadialProfile& f, const QuadratureSpec& quad) {
    if (f.decay == Decay::power && !std::isfinite(f.support_radius))
        throw PreconditionViolation("sup norm needs compact or gaussian decay");
    double R = std::isfinite(f.support_radius)
                   ? f.support_radius
                   : (f.decay == Decay::gaussian ? 50.0 / std::max(f.decay_rate, 1e-8) : 1.0);
    if (R <= 0.0) return 0.0;

    std::vector<double> xs;
    for (int j = 0; j <= 60; ++j) xs.push_back(R * std::pow(0.5, j));
    int nsamp = 2048;
    for (int i = 0; i <= nsamp; ++i) xs.push_back(R * i / nsamp);
    for (double b : f.breakpoints) {
        xs.push_back(b);
        xs.push_back(std::max(0.0, b * (1.0 - 1e-9)));
        xs.push_back(b * (1.0 + 1e-9));
    }
    std::sort(xs.begin(), xs.end());

    double best = 0.0, bx = 0.0;
    for (double x : xs) {
        double v = std::abs(f(x));
        if (v > best) {
            best = v;
            bx = x;
        }
    }
    // local golden-section refinement around the best sample
    double a = std::max(0.0, bx - R / nsamp), b = std::min(R, bx + R / nsamp);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
    for (int it = 0; it < 80; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = std::abs(f(x2));
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = std::abs(f(x1));
        }
    }
    (void)quad;
    return std::max(best, std::max(f1, f2));
}

}  // namespace

double lp_power_integral(const RadialProfile& f, double p, const SigmaMeasure& m, double lo,
                         double hi, const QuadratureSpec& quad) {
    if (!(p >= 1.0) || std::isinf(p)) throw std::invalid_argument("power integral needs finite p >= 1");
    const double W = m.weight_exponent();
    const double e0 = f.origin_exponent;

    double top = hi;
    if (std::isfinite(f.support_radius)) top = std::min(top, f.support_radius);
    if (!(lo < top)) return 0.0;

    auto raw = [&](double x) { return std::pow(std::abs(f(x)), p) * std::pow(x, W); };

    // collect panel edges: breakpoints and geometric spacing
    std::set<double> edges;
    edges.insert(lo);
    for (double b : f.breakpoints)
        if (b > lo && b < top) edges.insert(b);
    if (std::isfinite(top)) edges.insert(top);

    double total = 0.0;
    QuadratureSpec piece = quad;
    piece.abs_tol = quad.abs_tol * 0.25;

    double start = lo;
    if (lo == 0.0) {
        double g0 = p * e0 + W;
        if (g0 <= -1.0) throw NonIntegrable("radial integrand not integrable at 0");
        double first = *std::next(edges.begin());
        double c = std::min(first, std::isfinite(top) ? top : 1.0);
        if (p * std::abs(e0) > 1e-14) {
            auto smooth = [&](double x) {
                return std::pow(std::abs(f(x)) * std::pow(x, -e0), p);
            };
            total += integrate_jacobi(smooth, 0.0, c, g0, 0.0, piece).value;
        } else if (W != 0.0) {
            auto smooth = [&](double x) { return std::pow(std::abs(f(x)), p); };
            total += integrate_jacobi(smooth, 0.0, c, W, 0.0, piece).value;
        } else {
            total += integrate_gl(raw, 0.0, c, piece).value;
        }
        start = c;
    }

    if (std::isfinite(top)) {
        // interior panels between breakpoints; approach to the support edge is
        // geometrically graded to soak up fractional-power roll-off
        std::vector<double> pts{start};
        for (double edge : edges)
            if (edge > start && edge < top) pts.push_back(edge);
        pts.push_back(top);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            bool last = (i + 2 == pts.size()) && std::isfinite(f.support_radius) &&
                        top == f.support_radius;
            std::vector<double> sub;
            if (last) {
                double d = (pts[i + 1] - pts[i]) * 1e-7;
                sub = graded_panels(pts[i], pts[i + 1], 0.0, d);
            } else {
                sub = {pts[i], pts[i + 1]};
            }
            total += integrate_panels(raw, sub, piece).value;
        }
        return total;
    }

    // unbounded tail: doubled octaves until convergence
    double a = std::max(start, 1e-8);
    if (start < a) total += integrate_gl(raw, start, a, piece).value;
    double acc_scale = std::max(std::abs(total), piece.abs_tol);
    int it = 0;
    while (true) {
        double b = 2.0 * a;
        double chunk = integrate_gl(raw, a, b, piece).value;
        total += chunk;
        acc_scale = std::max(acc_scale, std::abs(total));
        if (b >= hi) break;
        if (std::abs(chunk) < std::max(piece.abs_tol, piece.rel_tol * acc_scale) && b > 4.0) break;
        if (++it > 60) throw NonIntegrable("radial tail does not converge");
        a = b;
    }
    return total;
}

double lp_norm_radial(const RadialProfile& f, double p, const SigmaMeasure& m,
                      const QuadratureSpec& quad) {
    if (std::isinf(p)) return profile_sup(f, quad);
    if (!(p >= 1.0)) throw std::invalid_argument("norm exponent must be >= 1");
    double power = lp_power_integral(f, p, m, 0.0, kInf, quad);
    return std::pow(power, 1.0 / p);
}

std::pair<RadialProfile, RadialProfile> extremizer_pair(double eps, double p, double q, int n,
                                                        double alpha) {
    if (!(eps > 0.0)) throw std::invalid_argument("extremizer needs eps > 0");
    if (!(n + alpha > 0.0)) throw std::invalid_argument("extremizer needs n + alpha > 0");
    if (std::isinf(p) || std::isinf(q))
        throw PreconditionViolation("extremizer sequences require finite p, q");

    auto make = [&](double expo) {
        double s = (n + alpha - 2.0 * eps) / (2.0 * expo);
        double amp = std::pow(eps, 1.0 / expo);
        RadialProfile f;
        f.eval = [amp, s](double x) { return (x > 0.0 && x < 1.0) ? amp * std::pow(x, -s) : 0.0; };
        f.support_radius = 1.0;
        f.decay = Decay::compact;
        f.origin_exponent = -s;
        return f;
    };
    return {make(p), make(q)};
}

InequalityReport lemma23_check(const RadialProfile& g, const RadialProfile& h,
                               const ExponentTriple& e, const XiMeasure& m, const SigmaMeasure& sm,
                               const QuadratureSpec& quad, double tol) {
    e.validate();
    if (e.relation != ExponentTriple::Relation::holder)
        throw std::invalid_argument("lemma 2.3 takes a Holder-type triple");

    double xg = -0.5 * (sm.n + sm.alpha) * ExponentTriple::inv(e.p);
    double yh = -0.5 * (sm.n + sm.alpha) * ExponentTriple::inv(e.q);
    if (finiteness_check(xg, yh, m) == Finiteness::divergent)
        throw PreconditionViolation("divergent beta");

    InequalityReport rep;
    rep.name = "lemma2.3";
    rep.n = sm.n;
    rep.p = e.p;
    rep.q = e.q;
    rep.r = e.r;
    rep.alpha = sm.alpha;
    rep.kernel = m.kernel.describe();
    rep.tolerance = tol;
    rep.quad_order = quad.order;

    rep.constant = beta_b(xg, yh, m, quad).value;
    rep.norms.emplace_back("g_p", lp_norm_radial(g, e.p, sm, quad));
    rep.norms.emplace_back("h_q", lp_norm_radial(h, e.q, sm, quad));

    RadialProfile B = bilinear_profile(g, h, m, quad);
    rep.lhs = lp_norm_radial(B, e.r, sm, quad);
    rep.finalize();
    return rep;
}

SharpnessResult sharpness_study(const ExponentTriple& e, const XiMeasure& m,
                                const SigmaMeasure& sm, std::vector<double> eps_list,
                                const QuadratureSpec& quad) {
    e.validate();
    if (e.relation != ExponentTriple::Relation::holder)
        throw std::invalid_argument("sharpness study takes a Holder-type triple");
    if (std::isinf(e.p) || std::isinf(e.q))
        throw PreconditionViolation("sharpness study restricted to finite p, q");

    double s0 = -0.5 * (sm.n + sm.alpha) / e.p;
    double t0 = -0.5 * (sm.n + sm.alpha) / e.q;
    if (finiteness_check(s0, t0, m) == Finiteness::divergent)
        throw PreconditionViolation("divergent beta");

    SharpnessResult result;
    result.sharp_constant = beta_b(s0, t0, m, quad).value;

    for (double eps : eps_list) {
        auto [g, h] = extremizer_pair(eps, e.p, e.q, sm.n, sm.alpha);
        SharpnessRow row;
        row.eps = eps;
        row.beta_eps = beta_b(s0 + eps / e.p, t0 + eps / e.q, m, quad).value;
        RadialProfile B = bilinear_profile(g, h, m, quad);
        row.piece_low = lp_power_integral(B, e.r, sm, 0.0, 1.0, quad);
        row.piece_high = lp_power_integral(B, e.r, sm, 1.0, 2.0, quad);
        double powered = row.piece_low + row.piece_high;
        row.norm = std::pow(powered, 1.0 / e.r);
        double lo_bound = std::pow(row.beta_eps, e.r);
        double hi_bound = lo_bound * std::pow(2.0, eps);
        row.sandwich_ok = powered >= lo_bound * (1.0 - 1e-7) && powered <= hi_bound * (1.0 + 1e-7);
        row.ratio = row.norm / result.sharp_constant;
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace bg
