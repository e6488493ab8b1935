#include "bg/bobylev.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <vector>

#include "bg/errors.hpp"

namespace bg {

namespace {

// fhat on the refined mode lattice with cubic (Keys a=-1/2) or linear
// interpolation per axis; queries beyond the lattice return 0.
class SpectralInterp {
  public:
    SpectralInterp(SpectralGrid fine, int order) : g_(std::move(fine)), order_(order) {}

    double dk() const { return g_.dk(); }

    std::complex<double> at_node(const std::vector<int>& freq) const {
        std::size_t idx = 0;
        for (int a = 0; a < g_.n; ++a) {
            int f = freq[a];
            if (f < -g_.N / 2 || f > g_.N / 2 - 1) return {0.0, 0.0};
            int m = f >= 0 ? f : f + g_.N;
            idx = idx * g_.N + m;
        }
        return g_.modes[idx];
    }

    std::complex<double> operator()(const Vec& kappa) const {
        double inv = 1.0 / g_.dk();
        double pos[3];
        for (int a = 0; a < g_.n; ++a) pos[a] = kappa[a] * inv;
        if (order_ == 1) return interp<2>(pos);
        return interp<4>(pos);
    }

  private:
    template <int S>
    std::complex<double> interp(const double* pos) const {
        int base[3];
        double w[3][S];
        for (int a = 0; a < g_.n; ++a) {
            double x = pos[a];
            int fl = static_cast<int>(std::floor(x));
            double t = x - fl;
            if constexpr (S == 2) {
                base[a] = fl;
                w[a][0] = 1.0 - t;
                w[a][1] = t;
            } else {
                base[a] = fl - 1;
                // Keys cubic convolution, a = -1/2
                double t2 = t * t, t3 = t2 * t;
                w[a][0] = 0.5 * (-t3 + 2.0 * t2 - t);
                w[a][1] = 0.5 * (3.0 * t3 - 5.0 * t2 + 2.0);
                w[a][2] = 0.5 * (-3.0 * t3 + 4.0 * t2 + t);
                w[a][3] = 0.5 * (t3 - t2);
            }
        }
        std::complex<double> acc(0.0, 0.0);
        std::vector<int> freq(g_.n);
        if (g_.n == 2) {
            for (int i = 0; i < S; ++i) {
                for (int j = 0; j < S; ++j) {
                    freq[0] = base[0] + i;
                    freq[1] = base[1] + j;
                    acc += w[0][i] * w[1][j] * at_node(freq);
                }
            }
        } else {
            for (int i = 0; i < S; ++i)
                for (int j = 0; j < S; ++j)
                    for (int k = 0; k < S; ++k) {
                        freq[0] = base[0] + i;
                        freq[1] = base[1] + j;
                        freq[2] = base[2] + k;
                        acc += (w[0][i] * w[1][j]) * w[2][k] * at_node(freq);
                    }
        }
        return acc;
    }

    SpectralGrid g_;
    int order_;
};

// suffix max of |fhat| over |kappa| shells, bucketed at dk resolution
std::vector<double> radial_envelope(const SpectralGrid& s) {
    int bins = static_cast<int>(std::ceil(std::sqrt(3.0) * s.N / 2)) + 2;
    std::vector<double> env(bins, 0.0);
    std::vector<int> freq(s.n);
    std::size_t total = s.modes.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        double r2 = 0.0;
        for (int a = s.n - 1; a >= 0; --a) {
            int m = static_cast<int>(rest % s.N);
            rest /= s.N;
            int f = m <= s.N / 2 - 1 ? m : m - s.N;
            r2 += static_cast<double>(f) * f;
        }
        int bin = std::min(bins - 1, static_cast<int>(std::sqrt(r2)));
        env[bin] = std::max(env[bin], std::abs(s.modes[idx]));
    }
    for (int b = bins - 2; b >= 0; --b) env[b] = std::max(env[b], env[b + 1]);
    return env;
}

}  // namespace

GridFunction q0_plus_bobylev(const GridFunction& f, const AngularKernel& kern,
                             const SphereRule& rule, const BobylevOptions& opt) {
    const int n = f.n;
    const int N = f.N;
    BetaResult cut = grad_cutoff(XiMeasure(kern, n));
    if (!cut.finite) throw PreconditionViolation("grad cut-off diverges");

    int up = opt.upsample;
    if (up == 0) up = (n == 3) ? (N <= 64 ? 4 : 2) : std::max(2, 512 / N);

    // zero-embed into the enlarged box [-up*L, up*L): same spacing, finer dk
    GridFunction padded;
    padded.n = n;
    padded.N = N * up;
    padded.L = f.L * up;
    padded.values.assign(padded.size(), 0.0);
    int off = (padded.N - N) / 2;
    if (n == 2) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                padded.values[padded.index(i + off, j + off)] = f.values[f.index(i, j)];
    } else {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k)
                    padded.values[padded.index(i + off, j + off, k + off)] =
                        f.values[f.index(i, j, k)];
    }

    SpectralGrid fine = fourier_transform(padded, opt.boundary_tol);
    bool aliased = fine.aliasing_flagged;
    SpectralInterp interp(std::move(fine), opt.interp_order);

    // coarse transform for the mode loop bookkeeping (envelope, k = 0)
    SpectralGrid coarse = fourier_transform(f, 1.0);  // aliasing already checked above
    auto env = radial_envelope(coarse);
    double fmax = 0.0;
    for (const auto& c : coarse.modes) fmax = std::max(fmax, std::abs(c));
    const double dk = coarse.dk();

    SpectralGrid qhat;
    qhat.n = n;
    qhat.N = N;
    qhat.L = f.L;
    qhat.aliasing_flagged = aliased;
    qhat.modes.assign(coarse.modes.size(), {0.0, 0.0});

    std::vector<int> fr(n);
    for (std::size_t idx = 0; idx < qhat.modes.size(); ++idx) {
        std::size_t rest = idx;
        for (int a = n - 1; a >= 0; --a) {
            int m = static_cast<int>(rest % N);
            rest /= N;
            fr[a] = m <= N / 2 - 1 ? m : m - N;
        }
        double r2 = 0.0;
        for (int a = 0; a < n; ++a) r2 += static_cast<double>(fr[a]) * fr[a];
        if (r2 == 0.0) {
            std::complex<double> f0 = coarse.modes[idx];
            qhat.modes[idx] = f0 * f0 * cut.value;
            continue;
        }
        int shell = static_cast<int>(std::sqrt(r2) / std::sqrt(2.0));
        if (env[std::min<int>(shell, env.size() - 1)] <= opt.mode_cutoff * fmax) continue;

        Vec kappa = Vec::zero(n);
        for (int a = 0; a < n; ++a) kappa[a] = fr[a] * dk;
        double kn = std::sqrt(r2) * dk;
        auto G = [&](const Vec& omega, double, double& re, double& im) {
            Vec half = omega * (0.5 * kn);
            Vec kp = kappa * 0.5 + half;
            Vec km = kappa * 0.5 - half;
            std::complex<double> prod = interp(kp) * interp(km);
            re = prod.real();
            im = prod.imag();
        };
        double re = 0.0, im = 0.0;
        sphere_integrate_kernel2(kappa * (1.0 / kn), kern, n, rule.polar_order(),
                                 rule.azimuth_count(), G, re, im);
        qhat.modes[idx] = {re, im};
    }

    GridFunction out = inverse_fourier(qhat);
    return out;
}

}  // namespace bg
