// weak_pump.hpp — Truncated pure-state model of the vanishing-drive limit

#pragma once

#include <Eigen/Dense>

#include <array>

#include "upb/errors.hpp"
#include "upb/liouvillian.hpp"

namespace upb {

// Amplitudes C_{n1 n2 nm} of the truncated steady state over the two-photon,
// one-phonon manifold, with C_000 = 1 fixed and C_001 excluded (it enters only
// at higher order in the drive).
struct WeakPumpSolution {
    static constexpr std::array<FockState, 10> triples() {
        return {FockState{1, 0, 0}, FockState{0, 1, 0}, FockState{0, 1, 1},
                FockState{1, 0, 1}, FockState{2, 0, 0}, FockState{1, 1, 0},
                FockState{0, 2, 0}, FockState{0, 2, 1}, FockState{1, 1, 1},
                FockState{2, 0, 1}};
    }

    std::array<Complex, 10> c{};

    Complex operator()(int n1, int n2, int nm) const {
        if (n1 == 0 && n2 == 0 && nm == 0) return Complex(1.0, 0.0);
        const auto tr = triples();
        for (std::size_t i = 0; i < tr.size(); ++i)
            if (tr[i] == FockState{n1, n2, nm}) return c[i];
        throw std::invalid_argument("WeakPumpSolution: amplitude not part of the model");
    }

    Complex c100() const { return c[0]; }
    Complex c010() const { return c[1]; }
    Complex c011() const { return c[2]; }
    Complex c101() const { return c[3]; }
    Complex c200() const { return c[4]; }
    Complex c110() const { return c[5]; }
    Complex c020() const { return c[6]; }
    Complex c021() const { return c[7]; }
    Complex c111() const { return c[8]; }
    Complex c201() const { return c[9]; }
};

// Solves the closed ten-equation linear system of the truncated model with
// the non-Hermitian shifts Delta -> Delta - i kappa/2 and omega_m -> omega_m
// - i gamma/2, dropping exactly the higher-order drive terms that close it:
// in the one-quantum equations the back-coupling from the two-photon manifold
// (sqrt(2) eps C200; eps C110; eps C111; eps C001 + sqrt(2) eps C201).
//
// Requires delta1 == delta2 and kappa1 == kappa2, which the truncation
// assumes; unequal inputs are rejected rather than averaged.
inline WeakPumpSolution solve_weak_pump(const SystemParams& p) {
    if (p.delta1 != p.delta2)
        throw std::invalid_argument("solve_weak_pump: requires delta1 == delta2");
    if (p.kappa1 != p.kappa2)
        throw std::invalid_argument("solve_weak_pump: requires kappa1 == kappa2");

    const Complex dt(p.delta1, -0.5 * p.kappa1);
    const Complex wm(p.omega_m, -0.5 * p.gamma);
    const double j = p.coupling_j;
    const double g = p.coupling_g;
    const double eps = p.drive_eps;
    const double s2 = std::sqrt(2.0);

    // Unknowns ordered as WeakPumpSolution::triples():
    // 0:100 1:010 2:011 3:101 4:200 5:110 6:020 7:021 8:111 9:201
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(10, 10);
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(10);

    // |100>: dt C100 + J C010 = -eps C000
    m(0, 0) = dt;
    m(0, 1) = j;
    rhs(0) = -eps;
    // |010>: dt C010 + J C100 + g C011 = 0
    m(1, 1) = dt;
    m(1, 0) = j;
    m(1, 2) = g;
    // |011>: (dt + wm) C011 + J C101 + g C010 = 0
    m(2, 2) = dt + wm;
    m(2, 3) = j;
    m(2, 1) = g;
    // |101>: (dt + wm) C101 + J C011 = 0
    m(3, 3) = dt + wm;
    m(3, 2) = j;
    // |200>: 2 dt C200 + sqrt2 eps C100 + sqrt2 J C110 = 0
    m(4, 4) = 2.0 * dt;
    m(4, 0) = s2 * eps;
    m(4, 5) = s2 * j;
    // |110>: 2 dt C110 + eps C010 + sqrt2 J (C200 + C020) + g C111 = 0
    m(5, 5) = 2.0 * dt;
    m(5, 1) = eps;
    m(5, 4) = s2 * j;
    m(5, 6) = s2 * j;
    m(5, 8) = g;
    // |020>: 2 dt C020 + sqrt2 J C110 + 2 g C021 = 0
    m(6, 6) = 2.0 * dt;
    m(6, 5) = s2 * j;
    m(6, 7) = 2.0 * g;
    // |021>: (2 dt + wm) C021 + sqrt2 J C111 + 2 g C020 = 0
    m(7, 7) = 2.0 * dt + wm;
    m(7, 8) = s2 * j;
    m(7, 6) = 2.0 * g;
    // |111>: (2 dt + wm) C111 + sqrt2 J (C201 + C021) + g C110 + eps C011 = 0
    m(8, 8) = 2.0 * dt + wm;
    m(8, 9) = s2 * j;
    m(8, 7) = s2 * j;
    m(8, 5) = g;
    m(8, 2) = eps;
    // |201>: (2 dt + wm) C201 + sqrt2 eps C101 + sqrt2 J C111 = 0
    m(9, 9) = 2.0 * dt + wm;
    m(9, 3) = s2 * eps;
    m(9, 8) = s2 * j;

    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    if (!lu.isInvertible())
        throw SingularSystemError("solve_weak_pump: truncated system is singular");

    WeakPumpSolution sol;
    const Eigen::VectorXcd x = lu.solve(rhs);
    for (int i = 0; i < 10; ++i) sol.c[static_cast<std::size_t>(i)] = x(i);
    return sol;
}

// g2(0) = (2|C200|^2 + 2|C201|^2) / (|C100|^2 + |C101|^2)^2.
inline double g2_weak_pump(const WeakPumpSolution& sol) {
    const double denom = std::norm(sol.c100()) + std::norm(sol.c101());
    if (denom < 1e-300)
        throw UndefinedCorrelationError("g2_weak_pump: one-photon amplitude vanishes");
    return (2.0 * std::norm(sol.c200()) + 2.0 * std::norm(sol.c201())) / (denom * denom);
}

struct PerturbativeC {
    Complex c200;
    Complex c201;
};

// Leading orders of C200 (even in g) and C201 (odd in g), at unit drive and
// with every rate normalized by omega_m; gamma is set to zero and Delta
// enters complex-shifted, Delta -> Delta - i kappa/2. The shorthands
// d1 = Delta + 1 and d2 = 2 Delta + 1 are the one- and two-photon phonon
// sideband detunings in these units.
inline PerturbativeC c_perturbative(const SystemParams& p) {
    if (p.delta1 != p.delta2)
        throw std::invalid_argument("c_perturbative: requires delta1 == delta2");
    if (p.kappa1 != p.kappa2)
        throw std::invalid_argument("c_perturbative: requires kappa1 == kappa2");
    if (p.omega_m <= 0.0)
        throw std::invalid_argument("c_perturbative: omega_m must be positive");

    const Complex d = Complex(p.delta1, -0.5 * p.kappa1) / p.omega_m;
    const double j = p.coupling_j / p.omega_m;
    const double g = p.coupling_g / p.omega_m;
    const Complex d1 = d + 1.0;
    const Complex d2 = 2.0 * d + 1.0;
    const double s2 = std::sqrt(2.0);

    const Complex pole1 = d * d - j * j;
    const Complex pole2 = d1 * d1 - j * j;
    constexpr double kPoleGuard = 1e-14;
    if (std::abs(pole1) < kPoleGuard)
        throw PoleError("c_perturbative: resonance pole Delta^2 - J^2", "Delta^2 - J^2");
    if (std::abs(pole2) < kPoleGuard)
        throw PoleError("c_perturbative: resonance pole (Delta + omega_m)^2 - J^2",
                        "(Delta + omega_m)^2 - J^2");
    if (std::abs(d) < kPoleGuard)
        throw PoleError("c_perturbative: resonance pole Delta", "Delta");

    PerturbativeC out;
    out.c200 = d * d / (s2 * pole1 * pole1)
               + g * g * j * j * (4.0 * d * d * d1 + j * j * d2)
                     / (2.0 * d * pole1 * pole1 * pole1 * pole2);
    out.c201 = -s2 * g * d * j * j / (pole1 * pole1 * pole2);
    return out;
}

struct OptimalConditions {
    double delta_opt;
    double g_opt;
};

// Closed-form optimum in the kappa << J << omega_m limit:
//   delta_opt = -kappa / (2 sqrt(3)),   g_opt^2 = (2 / (3 sqrt(3))) kappa^3 omega_m / J^2.
inline OptimalConditions optimal_conditions_limit(double j, double kappa, double omega_m,
                                                  Branch branch = Branch::negative) {
    if (j <= 0.0 || kappa <= 0.0 || omega_m <= 0.0)
        throw std::invalid_argument("optimal_conditions_limit: rates must be positive");
    const double sign = branch == Branch::negative ? -1.0 : 1.0;
    OptimalConditions out;
    out.delta_opt = sign * kappa / (2.0 * std::sqrt(3.0));
    out.g_opt = std::sqrt(2.0 / (3.0 * std::sqrt(3.0)) * kappa * kappa * kappa * omega_m) / j;
    return out;
}

} // namespace upb
