#include "bg/quadrature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "bg/errors.hpp"
#include "bg/simd.hpp"

namespace bg {

namespace {

// Eigenvalues of a symmetric tridiagonal matrix plus the first component of
// each normalized eigenvector (implicit-shift QL, EISPACK imtql2 restricted
// to the first eigenvector row). d: diagonal, e: off-diagonal (e[0..n-2]).
void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                             std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    z.assign(n, 0.0);
    if (n == 0) return;
    z[0] = 1.0;
    if (n == 1) return;
    e.resize(n, 0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw QuadratureFailure("tridiagonal eigensolver failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    // sort ascending, carrying z
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n), zs(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[idx[i]];
        zs[i] = z[idx[i]];
    }
    d.swap(ds);
    z.swap(zs);
}

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// Gauss rule on [-1,1] for the weight (1-t)^a (1+t)^b via Golub-Welsch.
GaussRule jacobi_rule(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("quadrature order must be positive");
    if (a <= -1.0 || b <= -1.0) throw NonIntegrable("Jacobi exponent <= -1");

    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    const double ab = a + b;
    diag[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double t = 2.0 * k + ab;
        diag[k] = (b * b - a * a) / (t * (t + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        double beta;
        if (k == 1) {
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            double t = 2.0 * k + ab;
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t * t - 1.0));
        }
        off[k - 1] = std::sqrt(beta);
    }

    std::vector<double> z;
    tridiag_eigen_first_row(diag, off, z);

    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + log_beta(a + 1.0, b + 1.0));
    GaussRule rule;
    rule.nodes = diag;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = std::clamp(rule.nodes[i], -1.0, 1.0);
        rule.weights[i] = mu0 * z[i] * z[i];
    }
    return rule;
}

struct RuleKey {
    int n;
    std::uint64_t a_bits;
    std::uint64_t b_bits;
    bool operator==(const RuleKey&) const = default;
};

struct RuleKeyHash {
    std::size_t operator()(const RuleKey& k) const {
        std::size_t h = std::hash<int>()(k.n);
        h ^= std::hash<std::uint64_t>()(k.a_bits) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::uint64_t>()(k.b_bits) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::mutex cache_mutex;
std::unordered_map<RuleKey, GaussRule, RuleKeyHash> rule_cache;

const GaussRule& cached_jacobi(int n, double a, double b) {
    RuleKey key{n, std::bit_cast<std::uint64_t>(a), std::bit_cast<std::uint64_t>(b)};
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = rule_cache.find(key);
    if (it != rule_cache.end()) return it->second;
    auto [ins, ok] = rule_cache.emplace(key, jacobi_rule(n, a, b));
    (void)ok;
    return ins->second;
}

double apply_jacobi01(const Integrand& f, double lo, double hi, double g0, double g1, int order) {
    // [-1,1] weight exponents: a multiplies (1-t) -> upper end, b the lower.
    const GaussRule& rule = cached_jacobi(order, g1, g0);
    const double len = hi - lo;
    const int n = order;
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
        double z = lo + len * 0.5 * (1.0 + rule.nodes[i]);
        vals[i] = f(z);
    }
    // dz scaling: len/2 from the affine map, len^{g0+g1} from the weight.
    double scale = std::pow(len, g0 + g1 + 1.0) * std::pow(2.0, -(g0 + g1 + 1.0));
    return scale * simd::dot(rule.weights.data(), vals.data(), n);
}

IntegralResult escalate(const std::function<double(int)>& eval_at_order, const QuadratureSpec& spec,
                        const char* what) {
    int order = std::max(2, spec.order);
    double prev = eval_at_order(order);
    while (true) {
        int next = order * 2;
        if (next > spec.max_order) {
            // accept the last estimate only if it already met tolerance
            throw QuadratureFailure(std::string(what) + ": tolerance unattained at order cap");
        }
        double cur = eval_at_order(next);
        double err = std::abs(cur - prev);
        if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(cur))) {
            return {cur, err};
        }
        prev = cur;
        order = next;
    }
}

}  // namespace

const GaussRule& gauss_legendre(int order) { return cached_jacobi(order, 0.0, 0.0); }

const GaussRule& gauss_jacobi01(int order, double b0, double b1) {
    // rebase [-1,1] rule for (1-t)^{b1} (1+t)^{b0} onto [0,1]
    RuleKey key{-order, std::bit_cast<std::uint64_t>(b0), std::bit_cast<std::uint64_t>(b1)};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = rule_cache.find(key);
        if (it != rule_cache.end()) return it->second;
    }
    GaussRule base = jacobi_rule(order, b1, b0);
    GaussRule mapped;
    mapped.nodes.resize(order);
    mapped.weights.resize(order);
    const double scale = std::pow(2.0, -(b0 + b1 + 1.0));
    for (int i = 0; i < order; ++i) {
        mapped.nodes[i] = 0.5 * (1.0 + base.nodes[i]);
        mapped.weights[i] = scale * base.weights[i];
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [ins, ok] = rule_cache.emplace(key, std::move(mapped));
    (void)ok;
    return ins->second;
}

IntegralResult integrate_jacobi(const Integrand& f, double lo, double hi, double g0, double g1,
                                const QuadratureSpec& spec) {
    if (!(hi > lo)) return {0.0, 0.0};
    if (g0 <= -1.0 || g1 <= -1.0) throw NonIntegrable("endpoint exponent <= -1");
    return escalate([&](int n) { return apply_jacobi01(f, lo, hi, g0, g1, n); }, spec,
                    "integrate_jacobi");
}

IntegralResult integrate_gl(const Integrand& f, double lo, double hi, const QuadratureSpec& spec) {
    return integrate_jacobi(f, lo, hi, 0.0, 0.0, spec);
}

IntegralResult integrate_panels(const Integrand& f, const std::vector<double>& breakpoints,
                                const QuadratureSpec& spec) {
    IntegralResult total;
    if (breakpoints.size() < 2) return total;
    QuadratureSpec panel_spec = spec;
    panel_spec.abs_tol = std::max(spec.abs_tol / double(breakpoints.size()), 1e-300);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        auto piece = integrate_gl(f, breakpoints[i], breakpoints[i + 1], panel_spec);
        total.value += piece.value;
        total.error += piece.error;
    }
    return total;
}

std::vector<double> graded_panels(double lo, double hi, double dist_left, double dist_right,
                                  int max_panels) {
    const double len = hi - lo;
    const double mid = 0.5 * (lo + hi);
    std::vector<double> pts{lo};
    if (dist_left > 0.0 && dist_left < 0.25 * len) {
        double w = dist_left;
        double x = lo;
        int k = 0;
        while (x + w < mid && k < max_panels / 2) {
            x += w;
            pts.push_back(x);
            w *= 2.0;
            ++k;
        }
    }
    std::vector<double> right_pts;
    if (dist_right > 0.0 && dist_right < 0.25 * len) {
        double w = dist_right;
        double x = hi;
        int k = 0;
        while (x - w > mid && k < max_panels / 2) {
            x -= w;
            right_pts.push_back(x);
            w *= 2.0;
            ++k;
        }
    }
    double right_start = right_pts.empty() ? hi : right_pts.back();
    if (pts.back() < right_start && (pts.size() > 1 || !right_pts.empty()))
        pts.push_back(0.5 * (pts.back() + right_start));
    for (auto it = right_pts.rbegin(); it != right_pts.rend(); ++it)
        if (*it > pts.back()) pts.push_back(*it);
    if (pts.back() < hi) pts.push_back(hi);
    return pts;
}

double apply_gl(const Integrand& f, double lo, double hi, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    std::vector<double> vals(order);
    for (int i = 0; i < order; ++i) vals[i] = f(mid + half * rule.nodes[i]);
    return half * simd::dot(rule.weights.data(), vals.data(), order);
}

}  // namespace bg
