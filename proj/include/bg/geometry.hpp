#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace bg {

// Small dense vector for n = 2 or 3.
struct Vec {
    int n = 3;
    std::array<double, 3> c{0.0, 0.0, 0.0};

    Vec() = default;
    Vec(double x, double y) : n(2), c{x, y, 0.0} {}
    Vec(double x, double y, double z) : n(3), c{x, y, z} {}
    static Vec zero(int dim) {
        Vec v;
        v.n = dim;
        return v;
    }
    static Vec axis(int dim, int i) {
        Vec v = zero(dim);
        v.c[i] = 1.0;
        return v;
    }

    double& operator[](int i) { return c[i]; }
    double operator[](int i) const { return c[i]; }

    Vec operator+(const Vec& o) const {
        Vec v = *this;
        for (int i = 0; i < n; ++i) v.c[i] += o.c[i];
        return v;
    }
    Vec operator-(const Vec& o) const {
        Vec v = *this;
        for (int i = 0; i < n; ++i) v.c[i] -= o.c[i];
        return v;
    }
    Vec operator*(double s) const {
        Vec v = *this;
        for (int i = 0; i < n; ++i) v.c[i] *= s;
        return v;
    }
    Vec operator-() const { return *this * -1.0; }

    double dot(const Vec& o) const {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += c[i] * o.c[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
    Vec normalized() const {
        double m = norm();
        if (m == 0.0) throw std::domain_error("cannot normalize the zero vector");
        return *this * (1.0 / m);
    }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

// k+ = (k + |k| w)/2, k- = (k - |k| w)/2; k summed back exactly, energies
// split, and the pair is orthogonal.
std::pair<Vec, Vec> post_collision_pair(const Vec& k, const Vec& omega);

// Deterministic orthonormal completion of a unit vector: e1 (and e2 for n=3)
// spanning the orthogonal complement.
void complete_frame(const Vec& unit, Vec& e1, Vec& e2);

}  // namespace bg
