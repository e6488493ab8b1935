#include "bg/rotation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bg {

double Rotation::det() const {
    if (n == 2) return m[0] * m[4] - m[1] * m[3];
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

double Rotation::orthogonality_defect() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += m[k * 3 + i] * m[k * 3 + j];
            worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

namespace {

struct GaussianStream {
    std::mt19937_64 engine;
    bool has_spare = false;
    double spare = 0.0;

    explicit GaussianStream(std::uint64_t seed) : engine(seed) {}

    double uniform01() {
        // 53-bit mantissa in (0,1]
        return ((engine() >> 11) + 1.0) * 0x1.0p-53;
    }
    double next() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        double u1 = uniform01(), u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare = r * std::sin(a);
        has_spare = true;
        return r * std::cos(a);
    }
};

}  // namespace

std::vector<Rotation> haar_rotations(int n, const RotationSampler& sampler) {
    if (n != 2 && n != 3) throw std::invalid_argument("rotation sampling supports n = 2 or 3");
    if (sampler.count <= 0) throw std::invalid_argument("rotation count must be positive");

    GaussianStream gauss(sampler.seed);
    std::vector<Rotation> out;
    out.reserve(sampler.count);

    for (int s = 0; s < sampler.count; ++s) {
        // columns of a Gaussian matrix, modified Gram-Schmidt
        std::array<std::array<double, 3>, 3> col{};
        while (true) {
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) col[j][i] = gauss.next();
            bool ok = true;
            for (int j = 0; j < n && ok; ++j) {
                for (int k = 0; k < j; ++k) {
                    double proj = 0.0;
                    for (int i = 0; i < n; ++i) proj += col[j][i] * col[k][i];
                    for (int i = 0; i < n; ++i) col[j][i] -= proj * col[k][i];
                }
                double nrm = 0.0;
                for (int i = 0; i < n; ++i) nrm += col[j][i] * col[j][i];
                nrm = std::sqrt(nrm);
                if (nrm < 1e-12) {
                    ok = false;
                    break;
                }
                for (int i = 0; i < n; ++i) col[j][i] /= nrm;
            }
            if (ok) break;
        }

        Rotation r;
        r.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.m[i * 3 + j] = col[j][i];
        if (r.det() < 0.0)
            for (int i = 0; i < n; ++i) r.m[i * 3 + (n - 1)] = -r.m[i * 3 + (n - 1)];
        out.push_back(r);
    }
    return out;
}

}  // namespace bg
