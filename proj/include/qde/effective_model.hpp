#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qde/coulomb_coupling.hpp"
#include "qde/mediator_dot.hpp"
#include "qde/operator_algebra.hpp"
#include "qde/rx_qubit.hpp"

namespace qde {

// Basis ordering everywhere: qubit a (x) qubit b (x) mediator. Per qubit the
// computational order is {|1>, |0>} with sigma_z|1> = +|1>; the mediator
// singlet order is {|S12>, |S11>} so tau_z|S12> = +|S12>. After each basis
// rotation the matrices are expressed in the rotated basis coordinates.
enum class Frame { lab, rotating, dressed_singlet, rwa, diagonalized, dressed_qubit, interaction };

struct FrameHamiltonian {
    Frame frame;
    Matrix matrix;  // static part; for time-dependent frames the value at t = 0
    bool time_dependent = false;
    std::function<Matrix(double)> generator;  // set when time_dependent
};

// Frequencies and angles of the transformed system. omega'_alpha = omega_alpha
// - 2 qz K0, omega'_s = omega_s + (q0a + q0b) DeltaK, delta_alpha = omega'_alpha
// - omega_d with omega_d = omega'_s (resonant mediator drive imposed),
// tan(theta_s) = (qz_a + qz_b) DeltaK / Omega_M, tan(theta_d) with the minus sign.
struct EffectiveSystemParams {
    double omega_a_pr, omega_b_pr, omega_s_pr;
    double delta_a, delta_b;
    double theta_s, theta_d;
    double Omega_s, Omega_d, Omega_M_prime, K_ab;
    double Omega_M, omega_d, phi;
    double omega_s;  // bare mediator splitting used for this cascade
    double q0_a, q0_b, qz_a, qz_b, qx_a, qx_b;  // qx_b carries the Appendix-B minus sign
    double K0, DeltaK, K_m;

    double t_g() const;  // pi / (4 K_ab)
};

// Bookkeeping of the oscillating factors kept/dropped at an RWA step.
struct RwaAudit {
    struct Term {
        std::string oscillating_factor;
        double amplitude;  // rad/ns
        double frequency;  // rad/ns
        bool dropped;
    };
    std::vector<Term> terms;
    double max_ratio = 0.0;  // max over dropped Omega_M-condition ratios
    bool pass = false;
    // predicted second-order qubit-frequency shifts from the dropped terms
    double delta_shift_a = 0.0, delta_shift_b = 0.0;
};

// Solves for the bare omega_s that places the gate at the quantization point
// delta_a = delta_b = 8 r K_ab with a resonantly driven mediator. Requires
// identical shifted qubit frequencies. Throws ConditionViolationError.
double solve_omega_s_for_r(const RxEigenmodel& a, const RxEigenmodel& b,
                           const CouplingStrengths& cpl, double omega_M, int r);

EffectiveSystemParams shifted_frequencies(const RxEigenmodel& a, const RxEigenmodel& b,
                                          double omega_s, const DriveParams& drv,
                                          const CouplingStrengths& cpl);

// 8x8 lab-frame effective Hamiltonian at time t.
Matrix build_h_l_eff(const RxEigenmodel& a, const RxEigenmodel& b, double omega_s,
                     const DriveParams& drv, const CouplingStrengths& cpl, double t_ns);

FrameHamiltonian lab_frame(const RxEigenmodel& a, const RxEigenmodel& b, double omega_s,
                           const DriveParams& drv, const CouplingStrengths& cpl);

// Static Hamiltonian in the frame rotating at omega_d after dropping
// e^{+-i omega_d t}, e^{+-2i omega_d t} terms (resonant case omega_d =
// omega'_s). Throws ValidityViolationError for Omega_M/omega_d > 0.1 or
// Omega_M = 0 (the cascade is drive-activated). Optionally emits the audit of
// counter-rotating terms.
FrameHamiltonian rotating_frame(const EffectiveSystemParams& p, RwaAudit* audit = nullptr);

// Conjugation by U_s = exp(-i pi tau_y / 4): dressed singlet representation.
FrameHamiltonian dressed_singlet_frame(const FrameHamiltonian& rotating);

// Drops the K_m flip-flop terms oscillating at e^{+-i delta t},
// e^{+-i(delta +- Omega_M) t}; keeps the slow e^{+-i Omega_M t} terms.
FrameHamiltonian rwa_reduce(const FrameHamiltonian& dressed, const EffectiveSystemParams& p,
                            RwaAudit* audit = nullptr);

struct DiagonalizedFrame {
    FrameHamiltonian fh;
    double theta_s, theta_d;
    Matrix u_d;  // 8x8, commutes with both sigma_alpha^z
};

// Qubit-state-conditional rotation of the mediator. Exact: the result is
// diagonal, sum delta/2 sigma_z + Omega'_M/2 tau_z^M + K_ab sigma_z sigma_z tau_z^M.
DiagonalizedFrame conditional_diagonalize(const FrameHamiltonian& rwa,
                                          const EffectiveSystemParams& p);

// 4x4 two-qubit Hamiltonian on the tau_z^M -> branch subspace (identity terms
// dropped): sum delta/2 sigma_z + branch * K_ab sigma_z sigma_z.
Matrix low_energy_two_qubit(const EffectiveSystemParams& p, int branch = -1);

struct DressedQubitModel {
    FrameHamiltonian fh;  // H_q, block-diagonal in tau_z^M
    Matrix h_minus;       // 4x4 on the tau_z^M -> -1 branch
    Matrix u_q;
};
DressedQubitModel dressed_qubit_model(const FrameHamiltonian& diagonalized,
                                      const EffectiveSystemParams& p);

// exp(-i H_- t) with H_- = -sum delta/2 sx - K_ab sx sx (dressed basis).
Matrix gate_unitary(double k_ab, double delta_a, double delta_b, double t_ns);

// U_xx = (1 + i sx sx)/sqrt(2)
Matrix gate_target();

struct GateConditions {
    double m_real;    // (4 K_ab t / pi - 1)/8
    double r_a_real;  // delta_a / (8 K_ab)
    double r_b_real;
    bool ok;
};
GateConditions gate_conditions(double k_ab, double delta_a, double delta_b, double t_ns,
                               double tol = 1e-9);

// 8-dim operator helpers in the fixed (a, b, mediator) ordering
Matrix qubit_op8(int which_qubit, const Matrix& op2);  // 0 = a, 1 = b
Matrix mediator_op8(const Matrix& op2);
Matrix u_s8();
Matrix u_q8();
Matrix u_d8(double theta_s, double theta_d);

}  // namespace qde
