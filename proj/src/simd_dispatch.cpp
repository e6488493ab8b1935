#include "bg/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace bg::simd {

namespace {

Backend detect() {
    const char* env = std::getenv("BG_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return Backend::scalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (env && std::strcmp(env, "avx2") == 0) return Backend::avx2;
    if (!env || std::strcmp(env, "auto") == 0) {
        if (__builtin_cpu_supports("avx2")) return Backend::avx2;
    }
    return Backend::scalar;
#elif defined(__aarch64__)
    if (env && std::strcmp(env, "neon") == 0) return Backend::neon;
    if (!env || std::strcmp(env, "auto") == 0) return Backend::neon;
    return Backend::scalar;
#else
    return Backend::scalar;
#endif
}

struct Table {
    Backend backend;
    double (*sum)(const double*, std::size_t);
    double (*dot2)(const double*, const double*, std::size_t);
    double (*dot3p)(const double*, const double*, const double*, std::size_t);
};

const Table& table() {
    static const Table t = [] {
        Table tab{Backend::scalar, reduce_sum_scalar, dot_scalar, dot3_scalar};
        switch (detect()) {
#if defined(__x86_64__) || defined(_M_X64)
            case Backend::avx2:
                tab = {Backend::avx2, reduce_sum_avx2, dot_avx2, dot3_avx2};
                break;
#endif
#if defined(__aarch64__)
            case Backend::neon:
                tab = {Backend::neon, reduce_sum_neon, dot_neon, dot3_neon};
                break;
#endif
            default:
                break;
        }
        return tab;
    }();
    return t;
}

}  // namespace

Backend active_backend() { return table().backend; }

std::string backend_name() {
    switch (table().backend) {
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
        default: return "scalar";
    }
}

double reduce_sum(const double* x, std::size_t n) { return table().sum(x, n); }
double dot(const double* a, const double* b, std::size_t n) { return table().dot2(a, b, n); }
double dot3(const double* a, const double* b, const double* c, std::size_t n) {
    return table().dot3p(a, b, c, n);
}

}  // namespace bg::simd
