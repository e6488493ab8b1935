#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "bg/velocity.hpp"

namespace bg {

// Real samples on the uniform periodic grid [-L, L)^n, N points per axis
// (power of two), row-major storage. v_j = -L + j * (2L/N) along each axis.
struct GridFunction {
    int n = 3;
    int N = 64;
    double L = 6.0;
    std::vector<double> values;

    double dv() const { return 2.0 * L / N; }
    std::size_t size() const;
    std::size_t index(int i0, int i1, int i2 = 0) const;
    double coord(int i) const { return -L + i * dv(); }
    Vec point(int i0, int i1, int i2 = 0) const;

    static GridFunction sample(const VelocityFunction& f, int N, double L);

    // max |f| over the outermost index shell relative to the global max
    double boundary_ratio() const;

    // flat little-endian doubles after a 32-byte header
    // (magic "BGF1", u32 n, u32 N, f64 L, zero padding)
    void save_bgf(const std::string& path) const;
    static GridFunction load_bgf(const std::string& path);
    // rows of index coordinates plus value
    void save_csv(const std::string& path) const;
};

// Complex modes on the dual grid, same layout; mode m carries the signed
// frequency freq(m) = m <= N/2-1 ? m : m - N, wavenumber freq * pi/L.
struct SpectralGrid {
    int n = 3;
    int N = 64;
    double L = 6.0;
    std::vector<std::complex<double>> modes;
    bool aliasing_flagged = false;

    double dk() const;
    int freq(int m) const { return m <= N / 2 - 1 ? m : m - N; }
    std::size_t index(int i0, int i1, int i2 = 0) const;
};

// Continuum convention fhat(k) = int f(v) e^{-i k.v} dv, discretized with the
// grid scaling factors applied. Flags (and warns once on stderr) when the
// boundary samples carry more than boundary_tol of the peak.
SpectralGrid fourier_transform(const GridFunction& f, double boundary_tol = 1e-9);

GridFunction inverse_fourier(const SpectralGrid& s);

// in-place power-of-two FFT, sign -1 forward / +1 inverse (unnormalized)
void fft_inplace(std::complex<double>* data, int count, int sign);

}  // namespace bg
