#pragma once

#include <stdexcept>
#include <string>

namespace bg {

// Requested tolerance could not be met within the configured order cap.
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

// Integral diverges, or its tail cannot be truncated below tolerance.
struct NonIntegrable : std::runtime_error {
    explicit NonIntegrable(const std::string& what) : std::runtime_error(what) {}
};

// An operation was invoked outside its stated hypotheses (e.g. a divergent
// beta constant). Distinct from a failed inequality.
struct PreconditionViolation : std::runtime_error {
    explicit PreconditionViolation(const std::string& what) : std::runtime_error(what) {}
};

// Bad CLI flags, config files, or grammar strings.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bg
