#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace bg {

// Uniform record for a certified inequality: lhs <= constant * prod(norms),
// with the verdict taken as ratio <= 1 + tolerance + mc_margin. Cells whose
// preconditions fail (divergent beta constant, bad exponent relation) are
// carried as skipped rather than failed.
struct InequalityReport {
    enum class Status { evaluated, skipped };

    std::string name;
    int n = 3;
    double p = std::numeric_limits<double>::quiet_NaN();
    double q = std::numeric_limits<double>::quiet_NaN();
    double r = std::numeric_limits<double>::quiet_NaN();
    double alpha = std::numeric_limits<double>::quiet_NaN();
    double lambda = std::numeric_limits<double>::quiet_NaN();
    std::string kernel;

    double lhs = 0.0;
    double constant = 0.0;
    std::vector<std::pair<std::string, double>> norms;
    double rhs = 0.0;
    double ratio = 0.0;
    double tolerance = 0.0;
    double mc_margin = 0.0;
    bool pass = false;

    Status status = Status::evaluated;
    std::string skip_reason;

    std::uint64_t seed = 0;
    int quad_order = 0;
    std::string provenance;

    // rhs = constant * prod(norms), ratio, pass
    void finalize();
};

enum class ReportFormat { csv, json };

// Byte-stable rendering: fixed field order, shortest round-trip decimals.
std::string render_csv(const std::vector<InequalityReport>& reports);
std::string render_json(const std::vector<InequalityReport>& reports);

// Write to destination path ("-" for stdout). I/O errors carry the path.
void emit(const std::vector<InequalityReport>& reports, ReportFormat format,
          const std::string& destination);

// Shortest round-trip decimal for doubles (17 significant digit cap); also
// used by the CSV grid export.
std::string format_double(double v);

}  // namespace bg
