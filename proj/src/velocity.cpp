#include "bg/velocity.hpp"

#include <cmath>
#include <sstream>

#include "bg/errors.hpp"

namespace bg {

double VelocityFunction::effective_radius(double tol) const {
    if (std::isfinite(support_radius)) return support_radius;
    if (decay == Decay::gaussian && decay_rate > 0.0) {
        // e^{-rate r^2} = tol, padded for slow polynomial prefactors
        return std::sqrt(-std::log(tol) / decay_rate) + 2.0 / std::sqrt(decay_rate);
    }
    throw NonIntegrable("cannot truncate a function without compact support or gaussian decay");
}

VelocityFunction VelocityFunction::zero(int n) {
    VelocityFunction f;
    f.n = n;
    f.eval = [](const Vec&) { return 0.0; };
    f.support_radius = 0.0;
    f.radial = true;
    f.profile = std::make_shared<RadialProfile>(RadialProfile::zero());
    return f;
}

VelocityFunction VelocityFunction::gaussian(int n, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("gaussian rate must be positive");
    VelocityFunction f;
    f.n = n;
    f.eval = [a](const Vec& v) { return std::exp(-a * v.norm2()); };
    f.decay = Decay::gaussian;
    f.decay_rate = a;
    f.radial = true;
    f.profile = std::make_shared<RadialProfile>(RadialProfile::gauss(1.0 / a));
    return f;
}

VelocityFunction VelocityFunction::bump(int n, double R) {
    if (!(R > 0.0)) throw std::invalid_argument("bump radius must be positive");
    VelocityFunction f;
    f.n = n;
    double R2 = R * R;
    auto prof = [R2](double x) {
        if (x >= R2) return 0.0;
        return std::exp(1.0 - R2 / (R2 - x));
    };
    f.eval = [prof](const Vec& v) { return prof(v.norm2()); };
    f.support_radius = R;
    f.decay = Decay::compact;
    f.radial = true;
    RadialProfile p;
    p.eval = prof;
    p.support_radius = R2;
    p.decay = Decay::compact;
    f.profile = std::make_shared<RadialProfile>(std::move(p));
    return f;
}

VelocityFunction VelocityFunction::from_profile(int n, RadialProfile profile) {
    VelocityFunction f;
    f.n = n;
    auto shared = std::make_shared<RadialProfile>(std::move(profile));
    f.eval = [shared](const Vec& v) { return (*shared)(v.norm2()); };
    f.support_radius = std::isfinite(shared->support_radius)
                           ? std::sqrt(shared->support_radius)
                           : kInf;
    f.decay = shared->decay;
    f.decay_rate = shared->decay_rate;
    f.radial = true;
    f.profile = shared;
    return f;
}

VelocityFunction VelocityFunction::shifted(const VelocityFunction& inner, const Vec& c) {
    VelocityFunction f;
    f.n = inner.n;
    auto base = inner.eval;
    Vec offset = c;
    f.eval = [base, offset](const Vec& v) { return base(v - offset); };
    f.support_radius =
        std::isfinite(inner.support_radius) ? inner.support_radius + offset.norm() : kInf;
    f.decay = inner.decay;
    f.decay_rate = inner.decay_rate;
    f.radial = false;
    return f;
}

VelocityFunction VelocityFunction::linearmod(const VelocityFunction& inner) {
    VelocityFunction f;
    f.n = inner.n;
    auto base = inner.eval;
    f.eval = [base](const Vec& v) { return v[0] * base(v); };
    f.support_radius = inner.support_radius;
    f.decay = inner.decay;
    f.decay_rate = inner.decay_rate;
    f.radial = false;
    return f;
}

VelocityFunction VelocityFunction::parse(int n, const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("bad test-function spec: " + text);
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (head == "gaussian") return gaussian(n, std::stod(rest));
        if (head == "bump") return bump(n, std::stod(rest));
        if (head == "shifted" || head == "linearmod") {
            // the inner spec runs to the first comma after its own argument,
            // e.g. shifted:gaussian:1,0.5,0,0
            if (head == "linearmod") return linearmod(parse(n, rest));
            auto inner_end = rest.find(',');
            if (inner_end == std::string::npos)
                throw ConfigError("shifted needs offsets: " + text);
            VelocityFunction inner = parse(n, rest.substr(0, inner_end));
            std::istringstream offs(rest.substr(inner_end + 1));
            Vec c = Vec::zero(n);
            std::string tok;
            int i = 0;
            while (std::getline(offs, tok, ',') && i < n) c[i++] = std::stod(tok);
            if (i != n) throw ConfigError("shifted needs n offsets: " + text);
            return shifted(inner, c);
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad test-function spec '") + text + "': " + e.what());
    }
    throw ConfigError("unknown test function: " + head);
}

}  // namespace bg
