#pragma once

#include <functional>
#include <memory>
#include <string>

#include "bg/geometry.hpp"
#include "bg/radial.hpp"

namespace bg {

// Scalar function on R^n. Radial functions carry the squared-radial profile
// f(k) = profile(|k|^2), which the radial fast paths and the reduction
// identities rely on.
struct VelocityFunction {
    int n = 3;
    std::function<double(const Vec&)> eval;
    double support_radius = kInf;  // in |v| units
    Decay decay = Decay::compact;
    double decay_rate = 0.0;  // gaussian: e^{-rate |v|^2}
    bool radial = false;
    std::shared_ptr<RadialProfile> profile;
    double mc_error = 0.0;  // relative statistical error, set by symmetrization

    double operator()(const Vec& v) const { return eval(v); }

    // radius beyond which |f| is negligible at the given relative tolerance
    double effective_radius(double tol = 1e-14) const;

    static VelocityFunction zero(int n);
    // e^{-a |v|^2}
    static VelocityFunction gaussian(int n, double a);
    // smooth bump exp(1 - R^2/(R^2-|v|^2)) inside |v| < R
    static VelocityFunction bump(int n, double R);
    static VelocityFunction from_profile(int n, RadialProfile profile);
    static VelocityFunction shifted(const VelocityFunction& inner, const Vec& c);
    // x1 * inner(x): breaks radial symmetry
    static VelocityFunction linearmod(const VelocityFunction& inner);
    // grammar: gaussian:<a> | bump:<R> | shifted:<inner>,<c1>,..,<cn> |
    //          linearmod:<inner>
    static VelocityFunction parse(int n, const std::string& text);
};

}  // namespace bg
