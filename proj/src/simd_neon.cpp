#include "bg/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

// NEON backend. Two float64x2 registers carry logical lanes 0/1 and 2/3.

namespace bg::simd {

namespace {

inline double hsum(float64x2_t acc01, float64x2_t acc23) {
    double l0 = vgetq_lane_f64(acc01, 0);
    double l1 = vgetq_lane_f64(acc01, 1);
    double l2 = vgetq_lane_f64(acc23, 0);
    double l3 = vgetq_lane_f64(acc23, 1);
    return (l0 + l1) + (l2 + l3);
}

}  // namespace

double reduce_sum_neon(const double* x, std::size_t n) {
    float64x2_t a01 = vdupq_n_f64(0.0), a23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a01 = vaddq_f64(a01, vld1q_f64(x + i));
        a23 = vaddq_f64(a23, vld1q_f64(x + i + 2));
    }
    double s = hsum(a01, a23);
    for (; i < n; ++i) s += x[i];
    return s;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t a01 = vdupq_n_f64(0.0), a23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        a01 = vaddq_f64(a01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        a23 = vaddq_f64(a23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    double s = hsum(a01, a23);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot3_neon(const double* a, const double* b, const double* c, std::size_t n) {
    float64x2_t a01 = vdupq_n_f64(0.0), a23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        float64x2_t p01 = vmulq_f64(vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)), vld1q_f64(c + i));
        float64x2_t p23 =
            vmulq_f64(vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)), vld1q_f64(c + i + 2));
        a01 = vaddq_f64(a01, p01);
        a23 = vaddq_f64(a23, p23);
    }
    double s = hsum(a01, a23);
    for (; i < n; ++i) s += (a[i] * b[i]) * c[i];
    return s;
}

}  // namespace bg::simd

#endif
