// convergence.hpp — Fock-cutoff convergence management around the solver

#pragma once

#include <optional>
#include <string>

#include "upb/observables.hpp"

namespace upb {

struct ConvergeOptions {
    int start_n_ph = 2;
    int start_n_m = 2;
    int max_n_ph = 24; // hard caps bracketing the largest production runs
    int max_n_m = 40;
    SolveOptions solve;
};

struct ConvergedSolve {
    int n_ph = 0;
    int n_m = 0;
    SteadyState state;
    double value = 0.0; // target observable at (n_ph, n_m)
};

namespace detail {

// Carry a solution over to a (larger) basis as a warm start, matching states
// by their occupation triples.
inline Eigen::VectorXcd embed_state(const Eigen::MatrixXcd& rho, const FockBasis& from,
                                    const FockBasis& to) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(to.size(), to.size());
    for (int i = 0; i < from.size(); ++i) {
        const int ti = to.index_of(from.state(i));
        if (ti < 0) continue;
        for (int j = 0; j < from.size(); ++j) {
            const int tj = to.index_of(from.state(j));
            if (tj >= 0) out(ti, tj) = rho(i, j);
        }
    }
    return vectorize(out);
}

inline double rel_change(double next, double ref) {
    return std::abs(next - ref) / std::max(std::abs(ref), 1e-12);
}

} // namespace detail

// Grows the cutoffs until raising either one by 1 moves the target observable
// by less than rel_tol; returns the first converged solve.
inline ConvergedSolve converge_cutoffs(const SystemParams& params, Observable target,
                                       double rel_tol, ConvergeOptions opts = {}) {
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("converge_cutoffs: rel_tol must be positive");

    auto solve_at = [&](int n_ph, int n_m, const SteadyState* prev) {
        const FockBasis basis(n_ph, n_m);
        SolveOptions s = opts.solve;
        if (prev)
            s.initial_guess = detail::embed_state(prev->rho, prev->basis, basis);
        return solve_steady_state(build_liouvillian(params, basis), s);
    };

    int n_ph = std::max(0, opts.start_n_ph);
    int n_m = std::max(0, opts.start_n_m);
    if (n_ph > opts.max_n_ph || n_m > opts.max_n_m)
        throw std::invalid_argument("converge_cutoffs: start cutoffs above the caps");

    SteadyState cur = solve_at(n_ph, n_m, nullptr);
    double value = observable_value(cur, target);

    for (;;) {
        if (n_ph + 1 > opts.max_n_ph || n_m + 1 > opts.max_n_m)
            throw ResourceLimitError("converge_cutoffs: cutoff cap reached at N_ph=" +
                                         std::to_string(n_ph) + ", N_m=" + std::to_string(n_m),
                                     n_ph, n_m);

        SteadyState probe_ph = solve_at(n_ph + 1, n_m, &cur);
        const double value_ph = observable_value(probe_ph, target);
        const bool ph_done = detail::rel_change(value_ph, value) < rel_tol;

        SteadyState probe_m = solve_at(n_ph, n_m + 1, &cur);
        const double value_m = observable_value(probe_m, target);
        const bool m_done = detail::rel_change(value_m, value) < rel_tol;

        if (ph_done && m_done)
            return ConvergedSolve{n_ph, n_m, std::move(cur), value};

        if (!ph_done && !m_done) {
            ++n_ph;
            ++n_m;
            cur = solve_at(n_ph, n_m, &probe_ph);
            value = observable_value(cur, target);
        } else if (!ph_done) {
            ++n_ph;
            cur = std::move(probe_ph);
            value = value_ph;
        } else {
            ++n_m;
            cur = std::move(probe_m);
            value = value_m;
        }
    }
}

} // namespace upb
