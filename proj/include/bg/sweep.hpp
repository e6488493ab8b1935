#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bg/quadrature.hpp"
#include "bg/report.hpp"

namespace bg {

// Axes of a verification sweep. Cells are the cartesian product of the axes
// that apply to the chosen check; a cell whose preconditions fail becomes a
// skipped report carrying the reason, and a cell that fails numerically
// becomes a skipped report with an "error:" reason. No cell aborts the sweep.
struct SweepSpec {
    std::string check = "thm1";  // thm1 | thm2 | lemma22 | lemma23 | sharpness
    std::vector<int> n_list{3};
    std::vector<double> alpha_list{0.0};
    std::vector<double> lambda_list{0.0};
    std::vector<std::string> kernel_list{"constant:1"};
    std::vector<std::array<double, 3>> exponent_list{{2.0, 2.0, 1.0}};
    std::vector<double> eps_list{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    std::vector<std::string> g_list{"gaussian:1"};
    std::vector<std::string> h_list{"gaussian:1"};
    std::string f = "bump:2";  // pairing function for lemma22
    std::uint64_t seed = 1;
    int rotations = 4096;
    int mc_triples = 0;  // lemma22: generate this many seeded random triples
    double tol = 1e-4;
    QuadratureSpec quad;
    int polar_order = 16;
    int azimuth_count = 32;
    int threads = 1;

    static SweepSpec from_json_text(const std::string& text);
    static SweepSpec from_json_file(const std::string& path);
};

std::vector<InequalityReport> run_sweep(const SweepSpec& spec);

// Seeded non-radial triple used by lemma 2.2 sweeps and the acceptance suite:
// compact bumps with randomized shifts and an optional linear modulation.
struct RandomTripleSpec {
    int n = 3;
    std::uint64_t seed = 1;
};

}  // namespace bg
