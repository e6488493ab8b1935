#pragma once

#include <cstdint>
#include <vector>

#include "bg/geometry.hpp"

namespace bg {

// Rotation matrix for n = 2 or 3, row-major.
struct Rotation {
    int n = 3;
    std::array<double, 9> m{};
    Vec apply(const Vec& v) const {
        Vec out = Vec::zero(v.n);
        for (int i = 0; i < v.n; ++i) {
            double s = 0.0;
            for (int j = 0; j < v.n; ++j) s += m[i * 3 + j] * v[j];
            out[i] = s;
        }
        return out;
    }
    double det() const;
    double orthogonality_defect() const;  // max |R^T R - I|
};

struct RotationSampler {
    int count = 4096;
    std::uint64_t seed = 1;
};

// Haar samples on SO(n): Gaussian matrix, Gram-Schmidt with positive
// diagonal, determinant fixed by flipping the last column. The Gaussian
// stream is a fixed Box-Muller over mt19937_64, so samples are stable across
// platforms for a given seed.
std::vector<Rotation> haar_rotations(int n, const RotationSampler& sampler);

}  // namespace bg
