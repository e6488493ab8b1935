#pragma once

#include <cstddef>
#include <string>

// Fixed-order reduction kernels. Every backend accumulates into four logical
// lanes (lane j takes elements j, j+4, j+8, ...), combines them as
// (l0+l1)+(l2+l3), then folds the tail sequentially. Because the order and
// the absence of FMA contraction are part of the contract, the scalar, AVX2
// and NEON backends produce bit-identical results, and repeated runs are
// byte-stable regardless of which backend the dispatcher picks.

namespace bg::simd {

enum class Backend { scalar, avx2, neon };

// Backend selected at startup: BG_SIMD env override (scalar|avx2|neon|auto),
// otherwise best available for the host CPU.
Backend active_backend();
std::string backend_name();

// sum_i x[i]
double reduce_sum(const double* x, std::size_t n);
// sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum_i a[i]*b[i]*c[i]  (quadrature weight times two factors)
double dot3(const double* a, const double* b, const double* c, std::size_t n);

// Reference implementations, always compiled; the dispatch targets must match
// them bit for bit.
double reduce_sum_scalar(const double* x, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double reduce_sum_avx2(const double* x, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
double dot3_avx2(const double* a, const double* b, const double* c, std::size_t n);
#endif

#if defined(__aarch64__)
double reduce_sum_neon(const double* x, std::size_t n);
double dot_neon(const double* a, const double* b, std::size_t n);
double dot3_neon(const double* a, const double* b, const double* c, std::size_t n);
#endif

}  // namespace bg::simd
