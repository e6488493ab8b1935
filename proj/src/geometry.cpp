#include "bg/geometry.hpp"

#include <cmath>

namespace bg {

std::pair<Vec, Vec> post_collision_pair(const Vec& k, const Vec& omega) {
    double kn = k.norm();
    if (kn == 0.0) throw std::domain_error("post-collision pair undefined at k = 0");
    if (std::abs(omega.norm2() - 1.0) > 1e-9)
        throw std::domain_error("omega must be a unit vector");
    Vec scaled = omega * kn;
    return {(k + scaled) * 0.5, (k - scaled) * 0.5};
}

void complete_frame(const Vec& unit, Vec& e1, Vec& e2) {
    int n = unit.n;
    if (n == 2) {
        e1 = Vec(-unit[1], unit[0]);
        e2 = Vec::zero(2);
        return;
    }
    // pick the axis least aligned with the vector, project, normalize
    int axis = 0;
    double best = std::abs(unit[0]);
    for (int i = 1; i < 3; ++i) {
        if (std::abs(unit[i]) < best) {
            best = std::abs(unit[i]);
            axis = i;
        }
    }
    Vec a = Vec::axis(3, axis);
    e1 = (a - unit * unit.dot(a)).normalized();
    e2 = Vec(unit[1] * e1[2] - unit[2] * e1[1], unit[2] * e1[0] - unit[0] * e1[2],
             unit[0] * e1[1] - unit[1] * e1[0]);
}

}  // namespace bg
