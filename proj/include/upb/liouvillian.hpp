// liouvillian.hpp — System parameters, Hamiltonian, and the vectorized Lindblad generator

#pragma once

#include <Eigen/Dense>

#include "upb/errors.hpp"
#include "upb/fock.hpp"

namespace upb {

// All rates are expressed in units of the common cavity linewidth kappa
// (kappa1 = kappa2 = 1 by default); unequal losses remain expressible.
struct SystemParams {
    double delta1 = 0.0;     // cavity-1 detuning from the drive
    double delta2 = 0.0;     // cavity-2 detuning from the drive
    double omega_m = 0.0;    // mechanical frequency
    double coupling_j = 0.0; // inter-cavity hopping J
    double coupling_g = 0.0; // single-photon optomechanical rate g
    double drive_eps = 0.0;  // (real) drive amplitude on cavity 1
    double kappa1 = 1.0;     // cavity loss rates
    double kappa2 = 1.0;
    double gamma = 0.0;      // mechanical loss rate
    double dephasing = 0.0;  // pure dephasing rate, equal on both cavities
    double n_th = 0.0;       // thermal occupation of the mechanical bath

    // Kerr-like shift g^2 / omega_m induced by the optomechanical coupling.
    double polaron_shift() const {
        if (omega_m <= 0.0)
            throw std::invalid_argument("polaron_shift: omega_m must be positive");
        return coupling_g * coupling_g / omega_m;
    }

    void validate() const {
        if (kappa1 < 0.0 || kappa2 < 0.0 || gamma < 0.0 || dephasing < 0.0)
            throw std::invalid_argument("SystemParams: loss rates must be nonnegative");
        if (n_th < 0.0)
            throw std::invalid_argument("SystemParams: n_th must be nonnegative");
    }
};

// Bose-Einstein occupation (exp(omega_m / k_B T) - 1)^{-1}; zero at T = 0.
inline double thermal_occupation(double k_b_t, double omega_m) {
    if (omega_m <= 0.0)
        throw std::invalid_argument("thermal_occupation: omega_m must be positive");
    if (k_b_t < 0.0)
        throw std::invalid_argument("thermal_occupation: k_B T must be nonnegative");
    if (k_b_t == 0.0) return 0.0;
    const double x = omega_m / k_b_t;
    if (x > 700.0) return 0.0; // exp overflows; the occupation is zero anyway
    return 1.0 / std::expm1(x);
}

enum class Branch { negative, positive };

// Optimal polaron-shifted detuning of the interference blockade as a function
// of hopping J and linewidth kappa:
//
//   delta_opt = -(1/2) sqrt( sqrt(9 J^4 + 8 kappa^2 J^2) - kappa^2 - 3 J^2 ).
//
// The variant with 9J^2 in place of 9J^4 under the inner root is dimensionally
// inconsistent and loses the J >> kappa limit -kappa/(2 sqrt(3)); the form
// above reproduces that limit and vanishes as kappa -> 0. Below J =
// kappa/sqrt(2) the radicand turns negative (no real optimum) and the value is
// clamped to 0, the continuous limit from above.
inline double delta_opt(double j, double kappa, Branch branch = Branch::negative) {
    if (j <= 0.0)
        throw std::invalid_argument("delta_opt: j must be positive");
    if (kappa < 0.0)
        throw std::invalid_argument("delta_opt: kappa must be nonnegative");
    const double j2 = j * j;
    const double k2 = kappa * kappa;
    const double radicand = std::sqrt(9.0 * j2 * j2 + 8.0 * k2 * j2) - k2 - 3.0 * j2;
    const double mag = 0.5 * std::sqrt(std::max(radicand, 0.0));
    return branch == Branch::negative ? -mag : mag;
}

// Default detuning wiring: delta2 - polaron_shift = delta1 = delta_opt(J, kappa1).
inline SystemParams with_optimal_detuning(SystemParams p, Branch branch = Branch::negative) {
    const double d = delta_opt(p.coupling_j, p.kappa1, branch);
    p.delta1 = d;
    p.delta2 = d + p.polaron_shift();
    return p;
}

// H = d1 a1'a1 + d2 a2'a2 + wm b2'b2 - J(a1'a2 + a2'a1) + g a2'a2 (b2' + b2)
//     + eps (a1' + a1)
inline SpMat build_hamiltonian(const SystemParams& p, const ModeOperators& ops) {
    const SpMat a1d = ops.a1.adjoint();
    const SpMat a2d = ops.a2.adjoint();
    const SpMat b2d = ops.b2.adjoint();
    const SpMat n1 = SpMat(a1d * ops.a1);
    const SpMat n2 = SpMat(a2d * ops.a2);
    const SpMat nm = SpMat(b2d * ops.b2);
    SpMat h = SpMat(p.delta1 * n1 + p.delta2 * n2 + p.omega_m * nm
                    - p.coupling_j * SpMat(a1d * ops.a2 + a2d * ops.a1)
                    + p.coupling_g * SpMat(n2 * SpMat(b2d + ops.b2))
                    + p.drive_eps * SpMat(a1d + ops.a1));
    h.prune(Complex(1.0, 0.0), 0.0); // drop exact zeros only
    return h;
}

inline SpMat build_hamiltonian(const SystemParams& p, const FockBasis& basis) {
    return build_hamiltonian(p, mode_operators(basis));
}

// Column stacking of a density matrix and its inverse.
inline Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
    return Eigen::Map<const Eigen::VectorXcd>(rho.data(), rho.size());
}

inline Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v, Eigen::Index d) {
    if (d < 0 || v.size() != d * d)
        throw std::invalid_argument("devectorize: length does not match the dimension");
    return Eigen::Map<const Eigen::MatrixXcd>(v.data(), d, d);
}

inline Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v) {
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (d * d != v.size())
        throw std::invalid_argument("devectorize: length is not a perfect square");
    return devectorize(v, d);
}

// vec(A rho B) = (B^T (x) A) vec(rho); transpose, not adjoint.
inline SpMat sandwich_superop(const SpMat& a, const SpMat& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("sandwich_superop: operands must be square and equal-sized");
    const SpMat bt = SpMat(b.transpose());
    return kron(bt, a);
}

// Superoperator of D[O] rho = 2 O rho O' - O'O rho - rho O'O.
inline SpMat dissipator_superop(const SpMat& op) {
    if (op.rows() != op.cols())
        throw std::invalid_argument("dissipator_superop: operator must be square");
    const int d = static_cast<int>(op.rows());
    const SpMat opd = SpMat(op.adjoint());
    const SpMat n = SpMat(opd * op);
    const SpMat id = sparse_identity(d);
    return SpMat(2.0 * sandwich_superop(op, opd)
                 - sandwich_superop(n, id) - sandwich_superop(id, n));
}

// The Lindblad generator in matrix form, acting on vec(rho).
struct SuperOperator {
    SpMat matrix; // D^2 x D^2
    FockBasis basis;
    Eigen::Index dim() const { return basis.size(); }
};

// L = -i(I(x)H - H^T(x)I) + sum_j (kappa_j/2) D[a_j]
//     + (gamma/2) [ (n_th+1) D[b2] + n_th D[b2'] ]
//     + (Gamma/2) sum_j D[a_j'a_j]
inline SuperOperator build_liouvillian(const SystemParams& p, const FockBasis& basis) {
    p.validate();
    const ModeOperators ops = mode_operators(basis);
    const SpMat h = build_hamiltonian(p, ops);
    const int d = basis.size();
    const SpMat id = sparse_identity(d);
    const Complex i_unit(0.0, 1.0);

    SpMat lv = SpMat(-i_unit * SpMat(sandwich_superop(h, id) - sandwich_superop(id, h)));
    if (p.kappa1 != 0.0)
        lv = SpMat(lv + 0.5 * p.kappa1 * dissipator_superop(ops.a1));
    if (p.kappa2 != 0.0)
        lv = SpMat(lv + 0.5 * p.kappa2 * dissipator_superop(ops.a2));
    if (p.gamma != 0.0) {
        lv = SpMat(lv + 0.5 * p.gamma * (p.n_th + 1.0) * dissipator_superop(ops.b2));
        if (p.n_th != 0.0)
            lv = SpMat(lv + 0.5 * p.gamma * p.n_th * dissipator_superop(SpMat(ops.b2.adjoint())));
    }
    if (p.dephasing != 0.0) {
        const SpMat n1 = SpMat(SpMat(ops.a1.adjoint()) * ops.a1);
        const SpMat n2 = SpMat(SpMat(ops.a2.adjoint()) * ops.a2);
        lv = SpMat(lv + 0.5 * p.dephasing * (dissipator_superop(n1) + dissipator_superop(n2)));
    }
    lv.makeCompressed();
    return SuperOperator{std::move(lv), basis};
}

} // namespace upb
