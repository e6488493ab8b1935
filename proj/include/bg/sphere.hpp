#pragma once

#include <functional>
#include <vector>

#include "bg/geometry.hpp"
#include "bg/kernel.hpp"

namespace bg {

// Product quadrature on S^{n-1}: Gauss nodes in the polar cosine t against
// the (1-t^2)^{(n-3)/2} surface factor, uniform azimuth (n=3) or the two
// half-circle points (n=2). Nodes are stored in a canonical frame with polar
// axis e_n and get rotated to any requested axis.
class SphereRule {
  public:
    SphereRule(int n, int polar_order, int azimuth_count);

    int dim() const { return n_; }
    int polar_order() const { return polar_order_; }
    int azimuth_count() const { return azimuth_count_; }

    // canonical nodes/weights (axis = last coordinate axis); sum(weights) =
    // |S^{n-1}|, exact for polynomials up to the declared order
    const std::vector<Vec>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

    // sum w_i F(omega_i, t_i) with the polar axis rotated onto `axis`
    double integrate(const Vec& axis, const std::function<double(const Vec&, double)>& F) const;

  private:
    int n_, polar_order_, azimuth_count_;
    std::vector<double> t_, tw_;  // polar nodes against (1-t^2)^{(n-3)/2}
    std::vector<Vec> nodes_;
    std::vector<double> weights_;
};

// Integral over S^{n-1} of G(omega, t) b(t), t = axis . omega, with the
// angular kernel's endpoint singularities absorbed into the polar rule.
// `collapse_azimuth` skips the azimuth loop when G depends on t alone.
double sphere_integrate_kernel(const Vec& axis, const AngularKernel& kern, int n, int polar_order,
                               int azimuth_count, bool collapse_azimuth,
                               const std::function<double(const Vec&, double)>& G);

// Same machinery for a complex-valued G (used by the spectral pipeline).
void sphere_integrate_kernel2(const Vec& axis, const AngularKernel& kern, int n, int polar_order,
                              int azimuth_count,
                              const std::function<void(const Vec&, double, double&, double&)>& G,
                              double& out_re, double& out_im);

}  // namespace bg
