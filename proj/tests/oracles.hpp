#pragma once

// Independent oracles for the test suite. Deliberately primitive: composite
// midpoint/Gauss sums on graded meshes and Gamma-function identities, with no
// shared code paths into the library quadratures beyond basic arithmetic.

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

inline double euler_beta(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// int_0^1 z^x (1-z)^y b(2z-1) [z(1-z)]^{(n-3)/2} dz by composite 32-point
// Gauss-Legendre on panels geometrically graded into both endpoints.
inline double graded_beta(double x, double y, int n,
                          const std::function<double(double)>& b_of_s,
                          int decades = 140) {
    static const double gl_x[16] = {
        0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
        0.3318686022821276497, 0.4213512761306353454, 0.5068999089322293900,
        0.5877157572407623290, 0.6630442669302152009, 0.7321821187402896804,
        0.7944837959679424070, 0.8493676137325699701, 0.8963211557660521240,
        0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
        0.9972638618494815635};
    static const double gl_w[16] = {
        0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
        0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
        0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
        0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
        0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
        0.0070186100094700966};

    auto integrand = [&](double z) {
        return std::pow(z, x) * std::pow(1.0 - z, y) * b_of_s(2.0 * z - 1.0) *
               std::pow(z * (1.0 - z), 0.5 * (n - 3));
    };
    auto panel = [&](double lo, double hi) {
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int i = 0; i < 16; ++i)
            acc += gl_w[i] * (integrand(mid + half * gl_x[i]) + integrand(mid - half * gl_x[i]));
        return acc * half;
    };

    std::vector<double> edges;
    for (int j = decades; j >= 1; --j) edges.push_back(0.5 * std::pow(2.0, -j));
    edges.push_back(0.5);
    for (int j = 1; j <= decades; ++j) edges.push_back(1.0 - 0.5 * std::pow(2.0, -j));

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) total += panel(edges[i], edges[i + 1]);
    // endpoint tails below the smallest panel, first-order power estimate
    double z0 = edges.front(), z1 = 1.0 - edges.back();
    double e0 = x + 0.5 * (n - 3), e1 = y + 0.5 * (n - 3);
    total += b_of_s(-1.0 + 2.0 * z0) * std::pow(z0, e0 + 1.0) / (e0 + 1.0);
    total += b_of_s(1.0 - 2.0 * z1) * std::pow(z1, e1 + 1.0) / (e1 + 1.0);
    return total;
}

// dense Riemann sum of int_0^1 g(xz) h(x(1-z)) dz (plain measure factor must
// be supplied inside g/h closures if needed)
inline double riemann_bilinear(const std::function<double(double)>& g,
                               const std::function<double(double)>& h, double x,
                               const std::function<double(double)>& weight, int steps = 2000000) {
    double acc = 0.0;
    double dz = 1.0 / steps;
    for (int i = 0; i < steps; ++i) {
        double z = (i + 0.5) * dz;
        acc += g(x * z) * h(x * (1.0 - z)) * weight(z);
    }
    return acc * dz;
}

}  // namespace oracle
