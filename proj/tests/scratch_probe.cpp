// development probe, not part of the test suite
#include <chrono>
#include <cstdio>

#include "oracles.hpp"
#include "qde/cli.hpp"
#include "qde/lindblad.hpp"
#include "qde/units.hpp"

using namespace qde;
using namespace qde::units;

int main() {
    RunConfig cfg;
    const auto d = cfg.derive();
    const auto& p = d.esp;

    std::printf("omega      = 2pi x %.6f GHz\n", to_2pi_GHz(d.model_a.omega));
    std::printf("qz         = %.8f  q0 = %.8f  qx = %.8f\n", d.model_a.qz, d.model_a.q0,
                d.model_a.qx);
    std::printf("K1         = 2pi x %.6f GHz\n", to_2pi_GHz(d.cpl.K1));
    std::printf("K2         = 2pi x %.6f GHz\n", to_2pi_GHz(d.cpl.K2));
    std::printf("DeltaK     = 2pi x %.6f GHz\n", to_2pi_GHz(d.cpl.DeltaK));
    std::printf("kappa      = 2pi x %.6f GHz, K_m = 2pi x %.6f\n", to_2pi_GHz(d.cpl.kappa),
                to_2pi_GHz(d.cpl.K_m));
    std::printf("Omega_M    = 2pi x %.6f MHz\n", to_2pi_MHz(p.Omega_M));
    std::printf("K_ab       = 2pi x %.6f MHz\n", to_2pi_MHz(p.K_ab));
    std::printf("2qzK0      = 2pi x %.6f GHz\n", to_2pi_GHz(2 * d.model_a.qz * d.cpl.K0));
    std::printf("q0sum*DK   = 2pi x %.6f GHz\n", to_2pi_GHz((p.q0_a + p.q0_b) * p.DeltaK));
    std::printf("omega_s    = 2pi x %.6f GHz\n", to_2pi_GHz(d.omega_s));
    std::printf("omega_s'   = 2pi x %.6f GHz\n", to_2pi_GHz(p.omega_s_pr));
    std::printf("delta      = 2pi x %.6f GHz\n", to_2pi_GHz(p.delta_a));
    std::printf("t_g        = %.6f ns\n", p.t_g());
    std::printf("theta_s    = %.6f rad, Omega_M' = 2pi x %.4f MHz\n", p.theta_s,
                to_2pi_MHz(p.Omega_M_prime));
    std::printf("T2*/t_g    = %.2f\n", cfg.t2_star_us * 1e3 / p.t_g());
    std::printf("C(34MHz)   = %.1f\n",
                cooperativity(from_2pi_MHz(34.0), from_2pi_MHz(0.25), from_2pi_MHz(0.37)));
    std::printf("C(chain)   = %.1f\n",
                cooperativity(p.K_ab, from_2pi_MHz(0.25), from_2pi_MHz(0.37)));

    // kappa oracle vs multipole
    GeometryParams g = cfg.geometry();
    const double k1o = numeric_coulomb_oracle(g, CoulombElement::K1);
    const double k2o = numeric_coulomb_oracle(g, CoulombElement::K2);
    const double kpo = numeric_coulomb_oracle(g, CoulombElement::kappa);
    std::printf("oracle/multipole: K1 %.4f  K2 %.4f  kappa %.4f\n", k1o / d.cpl.K1,
                k2o / d.cpl.K2, kpo / d.cpl.kappa);
    GeometryParams g2{100.0, 1000.0, 20.0, 11.7};
    const auto s2 = multipole_strengths(g2);
    std::printf("K1 rel diff at lambda/2a=0.05: %.3g\n",
                std::abs(numeric_coulomb_oracle(g2, CoulombElement::K1) - s2.K1) /
                    numeric_coulomb_oracle(g2, CoulombElement::K1));

    // RWA propagator infidelity vs pre-drop (dressed-singlet) Hamiltonian over t_g
    RwaAudit audit;
    const auto rot = rotating_frame(p, &audit);
    const auto ds = dressed_singlet_frame(rot);
    const auto rwa = rwa_reduce(ds, p, &audit);
    const Matrix u_exact = propagator(ds.matrix, p.t_g());
    const Matrix u_rwa = propagator(rwa.matrix, p.t_g());
    const double tr_fid = std::abs((u_rwa.adjoint() * u_exact).trace()) / 8.0;
    std::printf("rwa infidelity (1-|Tr|/8) = %.6g\n", 1.0 - tr_fid);
    std::printf("rwa predicted 2nd-order shift = 2pi x %.4f GHz -> phase %.4f rad over t_g\n",
                to_2pi_GHz(audit.delta_shift_a), audit.delta_shift_a * p.t_g());

    // same with kappa channel off
    CouplingStrengths cpl0 = d.cpl;
    cpl0.kappa = 0.0;
    cpl0.K_m = 0.0;
    const auto p0 = shifted_frequencies(d.model_a, d.model_b, d.omega_s, d.drive, cpl0);
    const auto ds0 = dressed_singlet_frame(rotating_frame(p0));
    const auto rwa0 = rwa_reduce(ds0, p0);
    const double tr0 = std::abs((propagator(rwa0.matrix, p0.t_g()).adjoint() *
                                 propagator(ds0.matrix, p0.t_g()))
                                    .trace()) /
                       8.0;
    std::printf("rwa infidelity (K_m = 0)  = %.6g\n", 1.0 - tr0);

    // stroboscopic first-RWA check over one drive period
    {
        const auto lab = lab_frame(d.model_a, d.model_b, d.omega_s, d.drive, d.cpl);
        const double T = 2.0 * pi / p.omega_d;
        const Matrix u_lab = oracles::schrodinger_propagator(lab.generator, T, 40000);
        // U_rf(T) at full period: exp(-i w T (Za+Zb+tz)/2) with w T = 2pi
        const Matrix gen = 0.5 * (qubit_op8(0, pauli_z()) + qubit_op8(1, pauli_z()) +
                                  mediator_op8(pauli_z()));
        const Matrix u_rf_T = propagator(p.omega_d * gen, T);
        const Matrix u_recon = u_rf_T * propagator(rot.matrix, T);
        std::printf("strobo |U_lab - U_recon| = %.4g (fid metric %.4g)\n",
                    (u_lab - u_recon).norm(),
                    1.0 - std::abs((u_recon.adjoint() * u_lab).trace()) / 8.0);
    }

    // gate fidelity timing + closed-form check
    auto t0 = std::chrono::steady_clock::now();
    const auto fr = gate_fidelity(cfg.noise(), p);
    auto t1 = std::chrono::steady_clock::now();
    std::printf("F(paper rates) = %.6f  [%.0f ms, steps %ld, refs %d]\n", fr.F,
                std::chrono::duration<double, std::milli>(t1 - t0).count(), fr.sim.steps,
                fr.sim.refinements);

    const double gamma = from_2pi_MHz(0.43);
    const auto fg = gate_fidelity({gamma, gamma, 0.0}, p);
    const double closed = std::pow(0.5 * (1.0 + std::exp(-gamma * p.t_g())), 2);
    std::printf("F(0.43,0) = %.8f closed form %.8f diff %.2g\n", fg.F, closed,
                std::abs(fg.F - closed));
    const auto fm = gate_fidelity({0.0, 0.0, from_2pi_MHz(0.87)}, p);
    std::printf("F(0,0.87) = %.8f\n", fm.F);

    // leakage run timing at short horizon
    t0 = std::chrono::steady_clock::now();
    LeakageOptions lopt;
    lopt.refine = false;
    lopt.samples = 300;
    const auto lk = leakage_simulation(d.model_a, d.model_b, d.omega_s, d.drive, d.cpl,
                                       cfg.noise(), 2.0 * p.t_g(), lopt);
    t1 = std::chrono::steady_clock::now();
    std::printf("leakage(2 t_g): max %.5f steps %ld [%.0f ms]\n", lk.max_leakage, lk.steps,
                std::chrono::duration<double, std::milli>(t1 - t0).count());
    return 0;
}
