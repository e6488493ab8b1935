#include "bg/grid.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include "bg/errors.hpp"
#include "bg/report.hpp"

namespace bg {

namespace {

bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

void check_shape(int n, int N, double L) {
    if (n != 2 && n != 3) throw std::invalid_argument("grids support n = 2 or 3");
    if (!power_of_two(N)) throw std::invalid_argument("grid size must be a power of two");
    if (!(L > 0.0)) throw std::invalid_argument("grid half-width must be positive");
}

}  // namespace

std::size_t GridFunction::size() const {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(N);
    return s;
}

std::size_t GridFunction::index(int i0, int i1, int i2) const {
    if (n == 2) return static_cast<std::size_t>(i0) * N + i1;
    return (static_cast<std::size_t>(i0) * N + i1) * N + i2;
}

Vec GridFunction::point(int i0, int i1, int i2) const {
    if (n == 2) return Vec(coord(i0), coord(i1));
    return Vec(coord(i0), coord(i1), coord(i2));
}

GridFunction GridFunction::sample(const VelocityFunction& f, int N, double L) {
    check_shape(f.n, N, L);
    GridFunction g;
    g.n = f.n;
    g.N = N;
    g.L = L;
    g.values.resize(g.size());
    if (f.n == 2) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) g.values[g.index(i, j)] = f(g.point(i, j));
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) g.values[g.index(i, j, k)] = f(g.point(i, j, k));
    }
    return g;
}

double GridFunction::boundary_ratio() const {
    double peak = 0.0, edge = 0.0;
    auto visit = [&](std::size_t idx, bool on_edge) {
        double a = std::abs(values[idx]);
        peak = std::max(peak, a);
        if (on_edge) edge = std::max(edge, a);
    };
    if (n == 2) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                visit(index(i, j), i == 0 || j == 0 || i == N - 1 || j == N - 1);
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    visit(index(i, j, k), i == 0 || j == 0 || k == 0 || i == N - 1 ||
                                              j == N - 1 || k == N - 1);
    }
    return peak > 0.0 ? edge / peak : 0.0;
}

void GridFunction::save_bgf(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    char header[32] = {};
    std::memcpy(header, "BGF1", 4);
    std::uint32_t un = n, uN = N;
    std::memcpy(header + 4, &un, 4);
    std::memcpy(header + 8, &uN, 4);
    std::memcpy(header + 12, &L, 8);
    out.write(header, 32);
    out.write(reinterpret_cast<const char*>(values.data()),
              static_cast<std::streamsize>(values.size() * sizeof(double)));
    if (!out) throw ConfigError("write failed: " + path);
}

GridFunction GridFunction::load_bgf(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open: " + path);
    char header[32];
    in.read(header, 32);
    if (!in || std::memcmp(header, "BGF1", 4) != 0)
        throw ConfigError("not a BGF1 file: " + path);
    std::uint32_t un, uN;
    std::memcpy(&un, header + 4, 4);
    std::memcpy(&uN, header + 8, 4);
    GridFunction g;
    g.n = static_cast<int>(un);
    g.N = static_cast<int>(uN);
    std::memcpy(&g.L, header + 12, 8);
    check_shape(g.n, g.N, g.L);
    g.values.resize(g.size());
    in.read(reinterpret_cast<char*>(g.values.data()),
            static_cast<std::streamsize>(g.values.size() * sizeof(double)));
    if (!in) throw ConfigError("truncated BGF1 file: " + path);
    return g;
}

void GridFunction::save_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open for writing: " + path);
    out << (n == 2 ? "i0,i1,value\n" : "i0,i1,i2,value\n");
    if (n == 2) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                out << i << ',' << j << ',' << format_double(values[index(i, j)]) << '\n';
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    out << i << ',' << j << ',' << k << ','
                        << format_double(values[index(i, j, k)]) << '\n';
    }
    if (!out) throw ConfigError("write failed: " + path);
}

double SpectralGrid::dk() const { return std::numbers::pi / L; }

std::size_t SpectralGrid::index(int i0, int i1, int i2) const {
    if (n == 2) return static_cast<std::size_t>(i0) * N + i1;
    return (static_cast<std::size_t>(i0) * N + i1) * N + i2;
}

void fft_inplace(std::complex<double>* a, int count, int sign) {
    if (!power_of_two(count)) throw std::invalid_argument("FFT length must be a power of two");
    // bit reversal
    for (int i = 1, j = 0; i < count; ++i) {
        int bit = count >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= count; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / len;
        std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (int i = 0; i < count; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (int j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

// apply a 1-d transform along each axis of an n-d cube
void fft_axes(std::vector<std::complex<double>>& data, int n, int N, int sign) {
    std::vector<std::complex<double>> line(N);
    if (n == 2) {
        for (int i = 0; i < N; ++i) fft_inplace(data.data() + static_cast<std::size_t>(i) * N, N, sign);
        for (int j = 0; j < N; ++j) {
            for (int i = 0; i < N; ++i) line[i] = data[static_cast<std::size_t>(i) * N + j];
            fft_inplace(line.data(), N, sign);
            for (int i = 0; i < N; ++i) data[static_cast<std::size_t>(i) * N + j] = line[i];
        }
        return;
    }
    std::size_t NN = static_cast<std::size_t>(N) * N;
    // last axis: contiguous
    for (std::size_t row = 0; row < NN; ++row) fft_inplace(data.data() + row * N, N, sign);
    // middle axis
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            for (int j = 0; j < N; ++j) line[j] = data[(static_cast<std::size_t>(i) * N + j) * N + k];
            fft_inplace(line.data(), N, sign);
            for (int j = 0; j < N; ++j) data[(static_cast<std::size_t>(i) * N + j) * N + k] = line[j];
        }
    }
    // first axis
    for (int j = 0; j < N; ++j) {
        for (int k = 0; k < N; ++k) {
            for (int i = 0; i < N; ++i) line[i] = data[(static_cast<std::size_t>(i) * N + j) * N + k];
            fft_inplace(line.data(), N, sign);
            for (int i = 0; i < N; ++i) data[(static_cast<std::size_t>(i) * N + j) * N + k] = line[i];
        }
    }
}

int parity_sum(int n, int N, std::size_t flat) {
    // sum of mode indices along axes
    int total = 0;
    std::size_t rest = flat;
    for (int a = 0; a < n; ++a) {
        total += static_cast<int>(rest % N);
        rest /= N;
    }
    return total;
}

}  // namespace

SpectralGrid fourier_transform(const GridFunction& f, double boundary_tol) {
    check_shape(f.n, f.N, f.L);
    SpectralGrid s;
    s.n = f.n;
    s.N = f.N;
    s.L = f.L;
    double ratio = f.boundary_ratio();
    if (ratio > boundary_tol) {
        s.aliasing_flagged = true;
        std::cerr << "warning: grid boundary carries " << ratio
                  << " of the peak; transform may alias\n";
    }
    s.modes.assign(f.values.begin(), f.values.end());
    fft_axes(s.modes, f.n, f.N, -1);
    double scale0 = std::pow(f.dv(), f.n);
    for (std::size_t i = 0; i < s.modes.size(); ++i) {
        double sc = parity_sum(f.n, f.N, i) % 2 == 0 ? scale0 : -scale0;
        s.modes[i] *= sc;
    }
    return s;
}

GridFunction inverse_fourier(const SpectralGrid& s) {
    check_shape(s.n, s.N, s.L);
    std::vector<std::complex<double>> work(s.modes);
    for (std::size_t i = 0; i < work.size(); ++i)
        if (parity_sum(s.n, s.N, i) % 2 != 0) work[i] = -work[i];
    fft_axes(work, s.n, s.N, +1);
    GridFunction g;
    g.n = s.n;
    g.N = s.N;
    g.L = s.L;
    g.values.resize(work.size());
    double scale = std::pow(s.dk() / (2.0 * std::numbers::pi), s.n);
    for (std::size_t i = 0; i < work.size(); ++i) g.values[i] = scale * work[i].real();
    return g;
}

}  // namespace bg
