// observables.hpp — Expectation values and zero-delay photon correlations

#pragma once

#include <string>

#include "upb/errors.hpp"
#include "upb/steady_state.hpp"

namespace upb {

inline constexpr double kOccupationGuard = 1e-14;

struct ObservableSet {
    double n1 = 0.0;
    double n2 = 0.0;
    double n_m = 0.0;
    double g2 = 0.0;              // mode-1 zero-delay correlation
    double g2_zero_phonon = 0.0;  // conditioned on the zero-phonon subspace
};

// Tr(rho O) over the stored entries of O.
inline Complex expectation(const Eigen::MatrixXcd& rho, const SpMat& op) {
    if (rho.rows() != op.rows() || rho.cols() != op.cols())
        throw std::invalid_argument("expectation: dimension mismatch");
    Complex s(0.0, 0.0);
    for (int k = 0; k < op.outerSize(); ++k)
        for (SpMat::InnerIterator it(op, k); it; ++it)
            s += it.value() * rho(it.col(), it.row());
    return s;
}

inline Complex expectation(const SteadyState& state, const SpMat& op) {
    return expectation(state.rho, op);
}

namespace detail {

// <a' a' a a> restricted by a diagonal weight W (identity or a projector
// commuting with a): Tr( (a rho a') (a'a W) ). Two sparse-dense products, the
// quartic operator is never formed.
inline double normally_ordered_fourth(const Eigen::MatrixXcd& rho, const SpMat& a,
                                      const SpMat& number_weight) {
    const Eigen::MatrixXcd sigma = a * rho * a.adjoint();
    return expectation(sigma, number_weight).real();
}

} // namespace detail

// g2(0) = <a'a'aa> / <a'a>^2 for the chosen cavity mode (1 or 2).
inline double g2_zero(const SteadyState& state, int mode = 1) {
    if (mode != 1 && mode != 2)
        throw std::invalid_argument("g2_zero: mode must be 1 or 2");
    const ModeOperators ops = mode_operators(state.basis);
    const SpMat& a = (mode == 1) ? ops.a1 : ops.a2;
    const SpMat number = SpMat(SpMat(a.adjoint()) * a);
    const double occ = expectation(state.rho, number).real();
    if (occ < kOccupationGuard)
        throw UndefinedCorrelationError("g2_zero: occupation below " +
                                        std::to_string(kOccupationGuard));
    const double m4 = detail::normally_ordered_fourth(state.rho, a, number);
    return std::max(m4, 0.0) / (occ * occ);
}

// g2_0(0) = <a1'a1'a1a1 P0> / <a1'a1 P0>^2 with P0 the zero-phonon projector.
// P0 commutes with the photon operators, so the literal operator ordering and
// the factored form used here coincide (asserted in the test suite).
inline double g2_zero_phonon(const SteadyState& state, const SpMat& p0) {
    const ModeOperators ops = mode_operators(state.basis);
    const SpMat number = SpMat(SpMat(ops.a1.adjoint()) * ops.a1);
    const SpMat number_p0 = SpMat(number * p0);
    const double occ = expectation(state.rho, number_p0).real();
    if (occ < kOccupationGuard)
        throw UndefinedCorrelationError("g2_zero_phonon: conditioned occupation below " +
                                        std::to_string(kOccupationGuard));
    const double m4 = detail::normally_ordered_fourth(state.rho, ops.a1, number_p0);
    return std::max(m4, 0.0) / (occ * occ);
}

inline double g2_zero_phonon(const SteadyState& state) {
    return g2_zero_phonon(state, zero_phonon_projector(state.basis));
}

inline double mode_occupation(const SteadyState& state, const SpMat& a) {
    return expectation(state.rho, SpMat(SpMat(a.adjoint()) * a)).real();
}

inline ObservableSet compute_observables(const SteadyState& state) {
    const ModeOperators ops = mode_operators(state.basis);
    ObservableSet o;
    o.n1 = mode_occupation(state, ops.a1);
    o.n2 = mode_occupation(state, ops.a2);
    o.n_m = mode_occupation(state, ops.b2);
    o.g2 = g2_zero(state, 1);
    o.g2_zero_phonon = g2_zero_phonon(state);
    return o;
}

enum class Observable { n1, n2, n_m, g2, g2_zero_phonon };

inline const char* observable_name(Observable o) {
    switch (o) {
        case Observable::n1: return "n1";
        case Observable::n2: return "n2";
        case Observable::n_m: return "n_m";
        case Observable::g2: return "g2";
        case Observable::g2_zero_phonon: return "g2_zero_phonon";
    }
    return "?";
}

inline double observable_value(const SteadyState& state, Observable o) {
    const ModeOperators ops = mode_operators(state.basis);
    switch (o) {
        case Observable::n1: return mode_occupation(state, ops.a1);
        case Observable::n2: return mode_occupation(state, ops.a2);
        case Observable::n_m: return mode_occupation(state, ops.b2);
        case Observable::g2: return g2_zero(state, 1);
        case Observable::g2_zero_phonon: return g2_zero_phonon(state);
    }
    throw std::invalid_argument("observable_value: unknown observable");
}

} // namespace upb
