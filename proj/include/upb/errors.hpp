// errors.hpp — Exception types for solver and observable failure modes

#pragma once

#include <stdexcept>
#include <string>

namespace upb {

// Malformed configuration input; message carries line/key context.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Iterative solve stopped short of the requested residual.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(const std::string& msg, double best_residual, long long iterations)
        : std::runtime_error(msg), best_residual(best_residual), iterations(iterations) {}
    double best_residual;
    long long iterations;
};

// Cutoff growth hit the configured hard cap before the observable settled.
class ResourceLimitError : public std::runtime_error {
public:
    ResourceLimitError(const std::string& msg, int n_ph_reached, int n_m_reached)
        : std::runtime_error(msg), n_ph_reached(n_ph_reached), n_m_reached(n_m_reached) {}
    int n_ph_reached;
    int n_m_reached;
};

// Correlation requested on a mode whose (conditioned) occupation is below the
// division guard.
class UndefinedCorrelationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear system singular at a measure-zero parameter coincidence.
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Perturbative expression evaluated at a resonance pole; names the offending
// denominator.
class PoleError : public std::runtime_error {
public:
    PoleError(const std::string& msg, std::string denominator)
        : std::runtime_error(msg), denominator(std::move(denominator)) {}
    std::string denominator;
};

} // namespace upb
