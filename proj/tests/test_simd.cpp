#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "bg/simd.hpp"

using namespace bg;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> v(n);
    for (auto& x : v) x = ((rng() >> 11) * 0x1.0p-53) * 2.0e3 - 1.0e3;
    return v;
}

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST_SUITE("simd") {

TEST_CASE("active backend matches scalar reference bit for bit") {
    INFO("backend: ", simd::backend_name());
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 257u, 1000u}) {
        auto a = random_values(n, 10 + n);
        auto b = random_values(n, 20 + n);
        auto c = random_values(n, 30 + n);
        CHECK(bit_equal(simd::reduce_sum(a.data(), n), simd::reduce_sum_scalar(a.data(), n)));
        CHECK(bit_equal(simd::dot(a.data(), b.data(), n), simd::dot_scalar(a.data(), b.data(), n)));
        CHECK(bit_equal(simd::dot3(a.data(), b.data(), c.data(), n),
                        simd::dot3_scalar(a.data(), b.data(), c.data(), n)));
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels agree with the scalar lane order exactly") {
    if (!__builtin_cpu_supports("avx2")) return;
    for (std::size_t n : {4u, 6u, 31u, 32u, 33u, 512u, 1023u}) {
        auto a = random_values(n, 40 + n);
        auto b = random_values(n, 50 + n);
        auto c = random_values(n, 60 + n);
        CHECK(bit_equal(simd::reduce_sum_avx2(a.data(), n), simd::reduce_sum_scalar(a.data(), n)));
        CHECK(bit_equal(simd::dot_avx2(a.data(), b.data(), n),
                        simd::dot_scalar(a.data(), b.data(), n)));
        CHECK(bit_equal(simd::dot3_avx2(a.data(), b.data(), c.data(), n),
                        simd::dot3_scalar(a.data(), b.data(), c.data(), n)));
    }
}
#endif

TEST_CASE("reductions are deterministic across repeated calls") {
    auto a = random_values(4097, 7);
    double first = simd::reduce_sum(a.data(), a.size());
    for (int i = 0; i < 8; ++i) CHECK(bit_equal(first, simd::reduce_sum(a.data(), a.size())));
}

TEST_CASE("known sums") {
    std::vector<double> ones(100, 1.0);
    CHECK(simd::reduce_sum(ones.data(), ones.size()) == 100.0);
    std::vector<double> seq(9);
    for (int i = 0; i < 9; ++i) seq[i] = i + 1;
    CHECK(simd::dot(seq.data(), seq.data(), 9) == doctest::Approx(285.0).epsilon(1e-15));
}

}  // TEST_SUITE
