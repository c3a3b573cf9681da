// steady_state.hpp — Stationary solve of L vec(rho) = 0 under Tr(rho) = 1

#pragma once

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseLU>

#include <algorithm>
#include <limits>
#include <utility>

#include "upb/errors.hpp"
#include "upb/liouvillian.hpp"

namespace upb {

enum class Backend { automatic, direct, iterative };
enum class TraceRowStrategy { first_diagonal, max_diagonal_coupling };

struct SolveOptions {
    Backend backend = Backend::automatic;
    double iter_tolerance = 1e-10;
    long long max_iterations = 0; // 0 -> 10 * D^2
    TraceRowStrategy trace_row_strategy = TraceRowStrategy::first_diagonal;
    // Residual at which a solution is accepted; iterative solves keep going
    // until they reach it (or fail).
    double target_residual = 1e-8;
    // Optional warm start for the iterative backend, as vec(rho) on the same
    // basis; ignored when the size does not match.
    Eigen::VectorXcd initial_guess;
};

struct SteadyState {
    Eigen::MatrixXcd rho;
    FockBasis basis;
    double residual = 0.0; // ||L vec(rho)|| / ||vec(rho)|| against the unreplaced L
    Backend solver = Backend::direct;
    int trace_row = 0;
    double hermiticity_defect = 0.0; // max |rho - rho'| before symmetrization
    double trace_defect = 0.0;       // |Tr rho - 1| before renormalization
    long long iterations = 0;        // iterative backend only
};

namespace detail {

// Vec-index of the diagonal element rho_{k,k}.
inline Eigen::Index diag_vec_index(Eigen::Index k, Eigen::Index d) { return k * (d + 1); }

inline int pick_trace_row(const SpMat& lv, int d, TraceRowStrategy strategy) {
    if (strategy == TraceRowStrategy::first_diagonal)
        return 0; // vec-index of rho_{0,0}
    // max-diagonal-coupling: among the rows of diagonal elements, the one with
    // the largest absolute row sum in L.
    std::vector<double> rowsum(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < lv.outerSize(); ++k) {
        for (SpMat::InnerIterator it(lv, k); it; ++it) {
            const Eigen::Index r = it.row();
            if (r % (d + 1) == 0) {
                const Eigen::Index diag = r / (d + 1);
                if (diag < d) rowsum[static_cast<std::size_t>(diag)] += std::abs(it.value());
            }
        }
    }
    int best = 0;
    for (int k = 1; k < d; ++k)
        if (rowsum[static_cast<std::size_t>(k)] > rowsum[static_cast<std::size_t>(best)]) best = k;
    return static_cast<int>(diag_vec_index(best, d));
}

inline SpMat replace_trace_row(const SpMat& lv, int d, int row) {
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(lv.nonZeros()) + static_cast<std::size_t>(d));
    for (int k = 0; k < lv.outerSize(); ++k)
        for (SpMat::InnerIterator it(lv, k); it; ++it)
            if (it.row() != row)
                t.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
    for (Eigen::Index k = 0; k < d; ++k)
        t.emplace_back(row, static_cast<int>(diag_vec_index(k, d)), Complex(1.0, 0.0));
    SpMat a(lv.rows(), lv.cols());
    a.setFromTriplets(t.begin(), t.end());
    a.makeCompressed();
    return a;
}

// Scale every row of a (and the matching entry of b) to unit 2-norm. The
// system is square and consistent, so the solution is unchanged while the
// least-squares iteration conditions much better.
inline void equilibrate_rows(SpMat& a, Eigen::VectorXcd& b) {
    const Eigen::Index n = a.rows();
    Eigen::VectorXd norm2 = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            norm2(it.row()) += std::norm(it.value());
    Eigen::VectorXd scale(n);
    for (Eigen::Index i = 0; i < n; ++i)
        scale(i) = norm2(i) > 0.0 ? 1.0 / std::sqrt(norm2(i)) : 1.0;
    for (int k = 0; k < a.outerSize(); ++k)
        for (SpMat::InnerIterator it(a, k); it; ++it)
            it.valueRef() *= scale(it.row());
    b = scale.cast<Complex>().asDiagonal() * b;
}

} // namespace detail

// Solves L vec(rho) = 0 with one row replaced by the unit-trace condition,
// then symmetrizes and renormalizes. The reported residual is measured
// against the original, unreplaced L.
inline SteadyState solve_steady_state(const SuperOperator& lv, const SolveOptions& opts = {}) {
    const int d = lv.basis.size();
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    if (lv.matrix.rows() != n || lv.matrix.cols() != n)
        throw std::invalid_argument("solve_steady_state: superoperator dimension mismatch");

    const int row = detail::pick_trace_row(lv.matrix, d, opts.trace_row_strategy);
    SpMat a = detail::replace_trace_row(lv.matrix, d, row);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
    b(row) = 1.0;

    Backend chosen = opts.backend;
    if (chosen == Backend::automatic)
        chosen = (d <= 200) ? Backend::direct : Backend::iterative;

    Eigen::VectorXcd x;
    long long iterations = 0;

    if (chosen == Backend::direct) {
        Eigen::SparseLU<SpMat> lu;
        lu.compute(a);
        if (lu.info() != Eigen::Success)
            throw SingularSystemError("solve_steady_state: sparse LU factorization failed");
        x = lu.solve(b);
    } else {
        detail::equilibrate_rows(a, b);
        Eigen::LeastSquaresConjugateGradient<SpMat> solver;
        solver.compute(a);
        solver.setTolerance(opts.iter_tolerance);

        const long long max_it = opts.max_iterations > 0 ? opts.max_iterations : 10LL * n;
        const long long chunk = std::clamp<long long>(n / 64, 250, 2500);

        x = opts.initial_guess.size() == n ? opts.initial_guess
                                           : Eigen::VectorXcd::Zero(n).eval();
        auto true_residual = [&](const Eigen::VectorXcd& v) {
            const double vn = v.norm();
            if (!(vn > 0.0)) return std::numeric_limits<double>::infinity();
            return (lv.matrix * v).norm() / vn;
        };

        // Aim below the acceptance target so the symmetrization step cannot
        // push the reported residual back over it.
        const double inner_target = 0.5 * opts.target_residual;
        double best = std::numeric_limits<double>::infinity();
        Eigen::VectorXcd xbest = x;
        double tol = opts.iter_tolerance;
        int stalled = 0;
        while (iterations < max_it) {
            solver.setMaxIterations(static_cast<Eigen::Index>(std::min(chunk, max_it - iterations)));
            x = solver.solveWithGuess(b, x);
            iterations += solver.iterations();
            const double r = true_residual(x);
            if (r < best * (1.0 - 1e-3)) {
                best = r;
                xbest = x;
                stalled = 0;
            } else {
                ++stalled;
            }
            if (best <= inner_target) break;
            if (solver.info() == Eigen::Success) {
                // Inner stopping criterion met before the true residual did;
                // tighten and keep going.
                if (tol <= 1e-15) break;
                tol *= 1e-2;
                solver.setTolerance(tol);
            }
            if (stalled >= 5) break;
        }
        x = std::move(xbest);
        if (best > opts.target_residual)
            throw NonConvergenceError("solve_steady_state: iterative solve stalled at residual "
                                          + std::to_string(best),
                                      best, iterations);
    }

    SteadyState out;
    out.basis = lv.basis;
    out.solver = chosen;
    out.trace_row = row;
    out.iterations = iterations;

    Eigen::MatrixXcd rho = devectorize(x, d);
    out.hermiticity_defect = (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
    rho = 0.5 * (rho + rho.adjoint().eval());
    const double tr = rho.trace().real();
    out.trace_defect = std::abs(tr - 1.0);
    if (!(std::abs(tr) > 0.0))
        throw SingularSystemError("solve_steady_state: solution has zero trace");
    rho /= tr;
    out.rho = std::move(rho);

    const Eigen::VectorXcd v = vectorize(out.rho);
    out.residual = (lv.matrix * v).norm() / v.norm();
    if (out.residual > opts.target_residual)
        throw NonConvergenceError("solve_steady_state: residual "
                                      + std::to_string(out.residual)
                                      + " above the acceptance target",
                                  out.residual, iterations);
    return out;
}

} // namespace upb
