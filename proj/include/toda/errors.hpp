#pragma once

#include <stdexcept>
#include <string>

namespace toda {

// Base class for all domain violations. CLI maps these to exit code 2.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// xi too close to an excluded hyperplane <nu-2xi,nu> = 0 for raw-series evaluation.
struct NearSingularSpectral : DomainError {
    explicit NearSingularSpectral(const std::string& msg)
        : DomainError("NearSingularSpectral: " + msg) {}
};

// Certified truncation tail bound exceeds the requested tolerance at the given level.
struct TailNotConverged : DomainError {
    explicit TailNotConverged(const std::string& msg)
        : DomainError("TailNotConverged: " + msg) {}
};

// A gamma-function argument sits within eta of a nonpositive integer.
struct CFunctionPole : DomainError {
    explicit CFunctionPole(const std::string& msg)
        : DomainError("CFunctionPole: " + msg) {}
};

// A difference-operator coefficient denominator vanishes within eta.
struct CoefficientPole : DomainError {
    explicit CoefficientPole(const std::string& msg)
        : DomainError("CoefficientPole: " + msg) {}
};

// Hypergeometric parameter within eta of a nonpositive integer.
struct ParameterPole : DomainError {
    explicit ParameterPole(const std::string& msg)
        : DomainError("ParameterPole: " + msg) {}
};

struct QuadratureNotConverged : DomainError {
    explicit QuadratureNotConverged(const std::string& msg)
        : DomainError("QuadratureNotConverged: " + msg) {}
};

// Cancellation noise exceeds the signal at the smallest probe offset.
struct PrecisionExhausted : DomainError {
    explicit PrecisionExhausted(const std::string& msg)
        : DomainError("PrecisionExhausted: " + msg) {}
};

// Position not in the open chamber x_1 > x_2 > ... > x_n > 0.
struct ChamberViolation : DomainError {
    explicit ChamberViolation(const std::string& msg)
        : DomainError("ChamberViolation: " + msg) {}
};

namespace detail {
// Drops the leading "TypeName: " tag so messages can be re-wrapped with context.
inline std::string strip_tag(const std::string& what) {
    const auto p = what.find(": ");
    return p == std::string::npos ? what : what.substr(p + 2);
}
}  // namespace detail

}  // namespace toda
