// development probe round 2
#include <chrono>
#include <cstdio>

#include "oracles.hpp"
#include "qde/cli.hpp"
#include "qde/lindblad.hpp"
#include "qde/units.hpp"

using namespace qde;
using namespace qde::units;

int main(int argc, char** argv) {
    const int mode = argc > 1 ? std::atoi(argv[1]) : 0;
    RunConfig cfg;
    const auto d = cfg.derive();
    const auto& p = d.esp;

    if (mode == 0) {
        // leakage with and without the kappa channel, 2 t_g, two phase steps
        for (double km_scale : {1.0, 0.0}) {
            CouplingStrengths c2 = d.cpl;
            c2.kappa *= km_scale;
            c2.K_m *= km_scale;
            for (double ps : {1.2, 0.6}) {
                LeakageOptions lopt;
                lopt.refine = false;
                lopt.phase_step = ps;
                lopt.samples = 400;
                auto t0 = std::chrono::steady_clock::now();
                const auto lk = leakage_simulation(d.model_a, d.model_b, d.omega_s, d.drive, c2,
                                                   cfg.noise(), 2.0 * p.t_g(), lopt);
                auto t1 = std::chrono::steady_clock::now();
                std::printf("kappa x%.0f ps=%.2f: max L = %.6f steps %ld [%.0f ms]\n", km_scale,
                            ps, lk.max_leakage, lk.steps,
                            std::chrono::duration<double, std::milli>(t1 - t0).count());
            }
        }
    } else if (mode == 1) {
        // kappa = 0 full horizon
        CouplingStrengths c2 = d.cpl;
        c2.kappa = 0.0;
        c2.K_m = 0.0;
        LeakageOptions lopt;
        lopt.refine = false;
        lopt.phase_step = 1.2;
        lopt.samples = 1200;
        auto t0 = std::chrono::steady_clock::now();
        const auto lk = leakage_simulation(d.model_a, d.model_b, d.omega_s, d.drive, c2,
                                           cfg.noise(), 9.0 * p.t_g(), lopt);
        auto t1 = std::chrono::steady_clock::now();
        std::printf("kappa=0 9tg: max L = %.6f steps %ld [%.0f ms] drift %.2g\n", lk.max_leakage,
                    lk.steps, std::chrono::duration<double, std::milli>(t1 - t0).count(),
                    lk.max_trace_drift);
    } else if (mode == 2) {
        // strobo control at weak coupling
        for (double s : {1.0, 0.01}) {
            CouplingStrengths c2 = d.cpl;
            c2.K0 *= s; c2.K1 *= s; c2.K2 *= s; c2.DeltaK *= s; c2.kappa *= s; c2.K_m *= s;
            const auto p2 = shifted_frequencies(d.model_a, d.model_b, d.omega_s, 
                DriveParams(cfg.lambda_nm, cfg.field_v_per_m,
                            d.omega_s + (d.model_a.q0 + d.model_b.q0) * c2.DeltaK, 0.0), c2);
            const auto rot2 = rotating_frame(p2);
            const auto lab2 = lab_frame(d.model_a, d.model_b, d.omega_s,
                DriveParams(cfg.lambda_nm, cfg.field_v_per_m, p2.omega_d, 0.0), c2);
            const double T = 2.0 * pi / p2.omega_d;
            const Matrix u_lab = oracles::schrodinger_propagator(lab2.generator, T, 40000);
            const Matrix gen = 0.5 * (qubit_op8(0, pauli_z()) + qubit_op8(1, pauli_z()) +
                                      mediator_op8(pauli_z()));
            const Matrix u_recon = propagator(p2.omega_d * gen, T) * propagator(rot2.matrix, T);
            std::printf("strobo scale %.2f: |dU| = %.6g\n", s, (u_lab - u_recon).norm());
        }
    } else if (mode == 3) {
        // fidelity at rounded-paper effective parameters
        EffectiveSystemParams pr = p;
        const double qz = 0.022, dk = from_2pi_GHz(4.8), om = from_2pi_MHz(97.0);
        pr.Omega_s = std::hypot(om, 2 * qz * dk);
        pr.Omega_d = om;
        pr.K_ab = (pr.Omega_s - pr.Omega_d) / 4.0;
        pr.Omega_M_prime = (pr.Omega_s + pr.Omega_d) / 2.0;
        pr.Omega_M = om;
        pr.theta_s = std::atan2(2 * qz * dk, om);
        pr.theta_d = 0.0;
        std::printf("rounded K_ab = 2pi x %.4f MHz, t_g = %.4f\n", to_2pi_MHz(pr.K_ab), pr.t_g());
        std::printf("F(0.25,0.37) rounded = %.6f\n", gate_fidelity(cfg.noise(), pr).F);
        EffectiveSystemParams p34 = pr;
        p34.K_ab = from_2pi_MHz(34.0);
        std::printf("F(0.25,0.37) K=34    = %.6f\n", gate_fidelity(cfg.noise(), p34).F);
    }
    return 0;
}
