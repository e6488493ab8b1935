#include "bg/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bg/quadrature.hpp"
#include "bg/simd.hpp"

namespace bg {

namespace {

// polar rule on [-1,1] against (1-t)^{e1}(1+t)^{e0}; nodes ascending
void polar_rule(int n, int order, double a_minus, double a_plus, std::vector<double>& t,
                std::vector<double>& w) {
    double surf = 0.5 * (n - 3);
    const GaussRule& rule = gauss_jacobi01(order, surf - a_plus, surf - a_minus);
    t.resize(order);
    w.resize(order);
    // rebase [0,1] -> [-1,1]: t = 2z-1, weight picks up 2^{g0+g1+1}
    double scale = std::pow(2.0, 2.0 * surf - a_plus - a_minus + 1.0);
    for (int i = 0; i < order; ++i) {
        t[i] = 2.0 * rule.nodes[i] - 1.0;
        w[i] = scale * rule.weights[i];
    }
}

Vec on_sphere(const Vec& axis, const Vec& e1, const Vec& e2, double t, double phi, int n) {
    double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    if (n == 2) return axis * t + e1 * (s * std::cos(phi));
    return axis * t + e1 * (s * std::cos(phi)) + e2 * (s * std::sin(phi));
}

}  // namespace

SphereRule::SphereRule(int n, int polar_order, int azimuth_count)
    : n_(n), polar_order_(polar_order), azimuth_count_(azimuth_count) {
    if (n != 2 && n != 3) throw std::invalid_argument("sphere rules support n = 2 or 3");
    if (polar_order < 1 || azimuth_count < 1)
        throw std::invalid_argument("sphere rule orders must be positive");

    polar_rule(n, polar_order, 0.0, 0.0, t_, tw_);
    Vec axis = Vec::axis(n, n - 1);
    Vec e1, e2;
    complete_frame(axis, e1, e2);

    if (n == 2) {
        for (int i = 0; i < polar_order; ++i) {
            nodes_.push_back(on_sphere(axis, e1, e2, t_[i], 0.0, 2));
            weights_.push_back(tw_[i]);
            nodes_.push_back(on_sphere(axis, e1, e2, t_[i], std::numbers::pi, 2));
            weights_.push_back(tw_[i]);
        }
        return;
    }
    double wphi = 2.0 * std::numbers::pi / azimuth_count;
    for (int i = 0; i < polar_order; ++i) {
        for (int j = 0; j < azimuth_count; ++j) {
            double phi = wphi * (j + 0.5);
            nodes_.push_back(on_sphere(axis, e1, e2, t_[i], phi, 3));
            weights_.push_back(tw_[i] * wphi);
        }
    }
}

double SphereRule::integrate(const Vec& axis,
                             const std::function<double(const Vec&, double)>& F) const {
    Vec u = axis.normalized();
    Vec e1, e2;
    complete_frame(u, e1, e2);
    std::vector<double> vals(nodes_.size());
    if (n_ == 2) {
        std::size_t idx = 0;
        for (int i = 0; i < polar_order_; ++i) {
            vals[idx++] = F(on_sphere(u, e1, e2, t_[i], 0.0, 2), t_[i]);
            vals[idx++] = F(on_sphere(u, e1, e2, t_[i], std::numbers::pi, 2), t_[i]);
        }
    } else {
        double wphi = 2.0 * std::numbers::pi / azimuth_count_;
        std::size_t idx = 0;
        for (int i = 0; i < polar_order_; ++i)
            for (int j = 0; j < azimuth_count_; ++j)
                vals[idx++] = F(on_sphere(u, e1, e2, t_[i], wphi * (j + 0.5), 3), t_[i]);
    }
    return simd::dot(weights_.data(), vals.data(), vals.size());
}

double sphere_integrate_kernel(const Vec& axis, const AngularKernel& kern, int n, int polar_order,
                               int azimuth_count, bool collapse_azimuth,
                               const std::function<double(const Vec&, double)>& G) {
    Vec u = axis.normalized();
    Vec e1, e2;
    complete_frame(u, e1, e2);

    std::vector<double> t, tw;
    polar_rule(n, polar_order, kern.a_minus(), kern.a_plus(), t, tw);

    std::vector<double> polar_vals(polar_order);
    if (collapse_azimuth) {
        double az_total = n == 2 ? 2.0 : 2.0 * std::numbers::pi;
        for (int i = 0; i < polar_order; ++i) {
            Vec w = on_sphere(u, e1, e2, t[i], 0.0, n);
            polar_vals[i] = az_total * G(w, t[i]) * kern.smooth_factor(t[i]);
        }
        return simd::dot(tw.data(), polar_vals.data(), polar_order);
    }

    if (n == 2) {
        for (int i = 0; i < polar_order; ++i) {
            double sum = G(on_sphere(u, e1, e2, t[i], 0.0, 2), t[i]) +
                         G(on_sphere(u, e1, e2, t[i], std::numbers::pi, 2), t[i]);
            polar_vals[i] = sum * kern.smooth_factor(t[i]);
        }
        return simd::dot(tw.data(), polar_vals.data(), polar_order);
    }

    double wphi = 2.0 * std::numbers::pi / azimuth_count;
    std::vector<double> az(azimuth_count);
    for (int i = 0; i < polar_order; ++i) {
        for (int j = 0; j < azimuth_count; ++j)
            az[j] = G(on_sphere(u, e1, e2, t[i], wphi * (j + 0.5), 3), t[i]);
        polar_vals[i] = wphi * simd::reduce_sum(az.data(), az.size()) * kern.smooth_factor(t[i]);
    }
    return simd::dot(tw.data(), polar_vals.data(), polar_order);
}

void sphere_integrate_kernel2(const Vec& axis, const AngularKernel& kern, int n, int polar_order,
                              int azimuth_count,
                              const std::function<void(const Vec&, double, double&, double&)>& G,
                              double& out_re, double& out_im) {
    Vec u = axis.normalized();
    Vec e1, e2;
    complete_frame(u, e1, e2);

    std::vector<double> t, tw;
    polar_rule(n, polar_order, kern.a_minus(), kern.a_plus(), t, tw);

    std::vector<double> pre(polar_order), pim(polar_order);
    if (n == 2) {
        for (int i = 0; i < polar_order; ++i) {
            double re = 0, im = 0, re2 = 0, im2 = 0;
            G(on_sphere(u, e1, e2, t[i], 0.0, 2), t[i], re, im);
            G(on_sphere(u, e1, e2, t[i], std::numbers::pi, 2), t[i], re2, im2);
            pre[i] = (re + re2) * kern.smooth_factor(t[i]);
            pim[i] = (im + im2) * kern.smooth_factor(t[i]);
        }
    } else {
        double wphi = 2.0 * std::numbers::pi / azimuth_count;
        std::vector<double> are(azimuth_count), aim(azimuth_count);
        for (int i = 0; i < polar_order; ++i) {
            for (int j = 0; j < azimuth_count; ++j)
                G(on_sphere(u, e1, e2, t[i], wphi * (j + 0.5), 3), t[i], are[j], aim[j]);
            double bf = kern.smooth_factor(t[i]) * wphi;
            pre[i] = bf * simd::reduce_sum(are.data(), are.size());
            pim[i] = bf * simd::reduce_sum(aim.data(), aim.size());
        }
    }
    out_re = simd::dot(tw.data(), pre.data(), polar_order);
    out_im = simd::dot(tw.data(), pim.data(), polar_order);
}

}  // namespace bg
