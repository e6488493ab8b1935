#include "bg/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bg/errors.hpp"

namespace bg {

AngularKernel AngularKernel::constant(double c) {
    if (c < 0.0) throw std::invalid_argument("angular kernel requires c >= 0");
    AngularKernel k;
    k.form_ = Form::constant;
    k.c_ = c;
    return k;
}

AngularKernel AngularKernel::endpoint_power(double c, double a_minus, double a_plus) {
    if (c < 0.0) throw std::invalid_argument("angular kernel requires c >= 0");
    AngularKernel k;
    k.form_ = Form::endpoint_power;
    k.c_ = c;
    k.a_minus_ = a_minus;
    k.a_plus_ = a_plus;
    return k;
}

AngularKernel AngularKernel::tabulated(std::vector<double> s, std::vector<double> b) {
    if (s.size() != b.size() || s.size() < 2)
        throw std::invalid_argument("tabulated kernel needs matching s/b columns, at least 2 rows");
    if (!std::is_sorted(s.begin(), s.end()))
        throw std::invalid_argument("tabulated kernel abscissae must be increasing");
    if (s.front() > -1.0 || s.back() < 1.0)
        throw std::invalid_argument("tabulated kernel must cover [-1,1]");
    for (double v : b)
        if (!(v >= 0.0)) throw std::invalid_argument("tabulated kernel values must be nonnegative");
    AngularKernel k;
    k.form_ = Form::tabulated;
    k.ts_ = std::move(s);
    k.bs_ = std::move(b);
    return k;
}

AngularKernel AngularKernel::tabulated_from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open kernel table: " + path);
    std::vector<double> s, b;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double sv, bv;
        if (!(row >> sv >> bv)) throw ConfigError("bad kernel table row in " + path + ": " + line);
        s.push_back(sv);
        b.push_back(bv);
    }
    return tabulated(std::move(s), std::move(b));
}

AngularKernel AngularKernel::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError("bad kernel spec: " + text);
    std::string head = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    try {
        if (head == "constant") return constant(std::stod(rest));
        if (head == "power") {
            std::istringstream args(rest);
            std::string tok;
            std::vector<double> v;
            while (std::getline(args, tok, ',')) v.push_back(std::stod(tok));
            if (v.size() != 3) throw ConfigError("power kernel needs c,a_minus,a_plus: " + text);
            return endpoint_power(v[0], v[1], v[2]);
        }
        if (head == "table") return tabulated_from_csv(rest);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("bad kernel spec '") + text + "': " + e.what());
    }
    throw ConfigError("unknown kernel form: " + head);
}

double AngularKernel::operator()(double s) const {
    switch (form_) {
        case Form::constant:
            return c_;
        case Form::endpoint_power:
            return c_ * std::pow(1.0 - s, -a_minus_) * std::pow(1.0 + s, -a_plus_);
        case Form::tabulated: {
            double x = std::clamp(s, ts_.front(), ts_.back());
            auto it = std::upper_bound(ts_.begin(), ts_.end(), x);
            std::size_t hi = std::min<std::size_t>(it - ts_.begin(), ts_.size() - 1);
            std::size_t lo = hi == 0 ? 0 : hi - 1;
            if (hi == lo) return bs_[lo];
            double t = (x - ts_[lo]) / (ts_[hi] - ts_[lo]);
            return (1.0 - t) * bs_[lo] + t * bs_[hi];
        }
    }
    return 0.0;
}

bool AngularKernel::even() const {
    switch (form_) {
        case Form::constant:
            return true;
        case Form::endpoint_power:
            return a_minus_ == a_plus_;
        case Form::tabulated: {
            for (std::size_t i = 0; i < ts_.size(); ++i) {
                double here = bs_[i];
                double mirror = (*this)(-ts_[i]);
                if (std::abs(here - mirror) > 1e-12 * (1.0 + std::abs(here))) return false;
            }
            return true;
        }
    }
    return false;
}

double AngularKernel::smooth_factor(double s) const {
    if (form_ == Form::endpoint_power) return c_;
    return (*this)(s);
}

std::string AngularKernel::describe() const {
    std::ostringstream out;
    switch (form_) {
        case Form::constant:
            out << "constant:" << c_;
            break;
        case Form::endpoint_power:
            out << "power:" << c_ << "," << a_minus_ << "," << a_plus_;
            break;
        case Form::tabulated:
            out << "table[" << ts_.size() << "]";
            break;
    }
    return out.str();
}

XiMeasure::XiMeasure(AngularKernel k, int dim) : kernel(std::move(k)), n(dim) {
    if (dim < 2) throw std::invalid_argument("dimension must be >= 2");
}

double xi_density(double z, const XiMeasure& m) {
    if (!(z > 0.0 && z < 1.0)) throw std::domain_error("xi density defined on (0,1)");
    return m.kernel(2.0 * z - 1.0) * std::pow(z * (1.0 - z), 0.5 * (m.n - 3));
}

Finiteness finiteness_check(double x, double y, const XiMeasure& m) {
    bool ok = (x + m.exponent_at_zero() > -1.0) && (y + m.exponent_at_one() > -1.0);
    return ok ? Finiteness::finite : Finiteness::divergent;
}

BetaResult beta_b(double x, double y, const XiMeasure& m, const QuadratureSpec& quad) {
    if (finiteness_check(x, y, m) == Finiteness::divergent) return BetaResult::divergent();

    const auto& kern = m.kernel;
    if (kern.form() != AngularKernel::Form::tabulated) {
        // b(2z-1) = c 2^{-a_minus-a_plus} z^{-a_plus} (1-z)^{-a_minus}; the full
        // integrand is a pure Jacobi weight times a constant.
        double g0 = x + m.exponent_at_zero();
        double g1 = y + m.exponent_at_one();
        double c = kern.coefficient() * std::pow(2.0, -(kern.a_minus() + kern.a_plus()));
        auto res = integrate_jacobi([&](double) { return c; }, 0.0, 1.0, g0, g1, quad);
        return {true, res.value, res.error};
    }

    // z = sin^2(theta): 2 int_0^{pi/2} sin^{2x+n-2} cos^{2y+n-2} b(2 sin^2 - 1)
    double ex = 2.0 * x + m.n - 2.0;
    double ey = 2.0 * y + m.n - 2.0;
    auto integrand = [&](double theta) {
        double sn = std::sin(theta), cs = std::cos(theta);
        double z = sn * sn;
        return 2.0 * std::pow(sn, ex) * std::pow(cs, ey) * kern(2.0 * z - 1.0);
    };
    auto res = integrate_gl(integrand, 0.0, std::numbers::pi / 2.0, quad);
    return {true, res.value, res.error};
}

BetaResult grad_cutoff(const XiMeasure& m, const QuadratureSpec& quad) {
    BetaResult base = beta_b(0.0, 0.0, m, quad);
    if (!base.finite) return base;
    double factor = std::pow(2.0, m.n - 2) * sphere_area(m.n - 2);
    return {true, factor * base.value, factor * base.error};
}

double sphere_area(int m) {
    if (m < 0) throw std::invalid_argument("sphere dimension must be >= 0");
    double half = 0.5 * (m + 1);
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

}  // namespace bg
