// scratch: explore weak-pump vs full-solver numbers before freezing tests
#include <cstdio>

#include "upb/convergence.hpp"
#include "upb/observables.hpp"
#include "upb/steady_state.hpp"
#include "upb/weak_pump.hpp"

using namespace upb;

int main() {
    // --- Fig. S6 setup: omega_m=24, g=1.16, gamma=0.01, k_B T = 0.1 kappa
    std::printf("== S6 curve: J, g2_weak(D=Dopt+Dg), g2_weak(D=Dopt), g2_full(eps=.1), g2_full(eps=1)\n");
    for (double j : {1.0, 2.0, 3.0, 4.5, 6.0}) {
        SystemParams p;
        p.omega_m = 24.0;
        p.coupling_j = j;
        p.coupling_g = 1.16;
        p.gamma = 0.01;
        p.n_th = thermal_occupation(0.1, 24.0);
        const double dopt = delta_opt(j, 1.0);
        const double dg = p.polaron_shift();

        SystemParams pw = p;
        pw.delta1 = pw.delta2 = dopt + dg;
        pw.drive_eps = 1e-3;
        SystemParams pw2 = pw;
        pw2.delta1 = pw2.delta2 = dopt;
        const double g2w_a = g2_weak_pump(solve_weak_pump(pw));
        const double g2w_b = g2_weak_pump(solve_weak_pump(pw2));

        SystemParams pf = with_optimal_detuning(p);
        pf.drive_eps = 0.1;
        const ConvergedSolve c1 = converge_cutoffs(pf, Observable::g2, 5e-3);
        pf.drive_eps = 1.0;
        const ConvergedSolve c2 = converge_cutoffs(pf, Observable::g2, 5e-3);
        std::printf("J=%.2f  %0.6g  %0.6g  %0.6g (Nph=%d,Nm=%d)  %0.6g (Nph=%d,Nm=%d)\n", j,
                    g2w_a, g2w_b, c1.value, c1.n_ph, c1.n_m, c2.value, c2.n_ph, c2.n_m);
    }

    // --- delta_opt vs brute-force weak-pump scan at J=3.6, omega_m=50
    {
        const double j = 3.6;
        SystemParams p;
        p.omega_m = 50.0;
        p.coupling_j = j;
        p.coupling_g = optimal_conditions_limit(j, 1.0, 50.0).g_opt;
        p.gamma = 0.0;
        p.drive_eps = 1e-3;
        double best_d = 0, best_g2 = 1e300;
        for (int k = 0; k <= 4000; ++k) {
            const double d = -0.6 + 0.55 * k / 4000.0;
            SystemParams q = p;
            q.delta1 = q.delta2 = d + q.polaron_shift();
            const double val = g2_weak_pump(solve_weak_pump(q));
            if (val < best_g2) {
                best_g2 = val;
                best_d = d;
            }
        }
        std::printf("scan argmin Delta(polaron-shifted) = %.6f  vs delta_opt(3.6,1) = %.6f ; g2min=%g ; g_opt=%g\n",
                    best_d, delta_opt(j, 1.0), best_g2, p.coupling_g);
    }

    // --- local-minimum structure around the closed-form optimum (J=10, wm=50)
    {
        const double j = 10.0, wm = 50.0;
        const OptimalConditions oc = optimal_conditions_limit(j, 1.0, wm);
        auto g2at = [&](double d, double g) {
            SystemParams q;
            q.omega_m = wm;
            q.coupling_j = j;
            q.coupling_g = g;
            q.gamma = 0.0;
            q.drive_eps = 1e-3;
            q.delta1 = q.delta2 = d + g * g / wm;
            return g2_weak_pump(solve_weak_pump(q));
        };
        const double c = g2at(oc.delta_opt, oc.g_opt);
        for (double rel : {0.02, 0.05, 0.10}) {
            std::printf("rel=%.2f center=%g  d+=%g d-=%g  g+=%g g-=%g\n", rel, c,
                        g2at(oc.delta_opt * (1 + rel), oc.g_opt),
                        g2at(oc.delta_opt * (1 - rel), oc.g_opt),
                        g2at(oc.delta_opt, oc.g_opt * (1 + rel)),
                        g2at(oc.delta_opt, oc.g_opt * (1 - rel)));
        }
    }

    // --- perturbative coefficients vs the ten-equation solve (omega_m units)
    {
        for (double g : {0.02, 0.01, 0.005}) {
            SystemParams p;
            p.omega_m = 1.0;
            p.kappa1 = p.kappa2 = 1.0 / 24.0;
            p.delta1 = p.delta2 = -0.012;
            p.coupling_j = 0.12;
            p.coupling_g = g;
            p.gamma = 0.0;
            p.drive_eps = 1.0;
            const WeakPumpSolution sol = solve_weak_pump(p);
            const PerturbativeC pc = c_perturbative(p);
            const double e200 = std::abs(sol.c200() - pc.c200) / std::abs(sol.c200());
            const double e201 = std::abs(sol.c201() - pc.c201) / std::abs(sol.c201());
            std::printf("g=%.3f  rel_err c200=%.3e  c201=%.3e\n", g, e200, e201);
        }
    }
    return 0;
}
