#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qde/effective_model.hpp"

namespace qde {

struct NoiseParams {
    double gamma_a = 0.0, gamma_b = 0.0, gamma_M = 0.0;  // rad/ns

    // dressed-basis validity gamma_M << Omega_M
    bool dressed_basis_warn(double omega_M) const { return gamma_M > 0.1 * omega_M; }
};

// One dephasing channel (rate/2)(L rho L - rho) with L^2 = 1.
struct Dissipator {
    double rate = 0.0;
    Matrix op;
    std::function<Matrix(double)> op_t;  // set for time-dependent channels
    bool time_dependent = false;
};

struct EvolveOptions {
    double dt = 0.0;             // base step; required
    int max_refinements = 6;     // step-halving rounds
    double refine_tol = 1e-8;    // stop when the metric changes less than this
    double trace_tol = 1e-6;     // InvariantBreach beyond this drift
    int store_points = 0;        // observable samples (0 = none)
    std::function<double(double, const Matrix&)> observable;  // sampled when storing
};

struct SimulationResult {
    std::vector<double> times;
    std::vector<double> series;
    Matrix final_state;
    long steps = 0;
    double max_trace_drift = 0.0;
    int refinements = 0;
    double refine_delta = 0.0;  // metric change at the accepted refinement
    double metric = 0.0;
};

// Fixed-step RK4 integration of
//   drho/dt = -i[H(t), rho] + sum_k (rate_k/2)(L_k rho L_k - rho),
// repeated with halved steps until the metric of the final state changes by
// less than refine_tol. Trace drift is reported, never renormalized away.
// Throws StepNonConvergenceError / InvariantBreachError.
SimulationResult evolve(const FrameHamiltonian& h, const std::vector<Dissipator>& dissipators,
                        const Matrix& rho0, double t_end, const EvolveOptions& opt,
                        const std::function<double(const Matrix&)>& metric = {});

// Dephasing operators of the master equation in each frame. lab/rotating:
// {sigma_z^a, sigma_z^b, tau_z}; dressed_singlet/rwa: tau_z -> tau~_x;
// diagonalized: T_x = U_d^dag tau~_x U_d; dressed_qubit: qubit operators map
// to -sigma~_x and T_x -> T~_x; interaction: T_x'(t) = U_int^dag T~_x U_int.
std::vector<Dissipator> dissipator_operators(Frame frame, const EffectiveSystemParams& p,
                                             const NoiseParams& noise);

// T_x and T~_x of the diagonalized / dressed-qubit master equations.
Matrix t_x_operator(const EffectiveSystemParams& p);
Matrix t_x_tilde_operator(const EffectiveSystemParams& p);

struct FidelityResult {
    double F;
    double t_g;
    SimulationResult sim;
};

// Gate fidelity F = Tr[rho_ideal(t_g) rho(t_g)] of the interaction-picture
// master equation with initial state |eg, M_-> (or psi_i when given).
FidelityResult gate_fidelity(const NoiseParams& noise, const EffectiveSystemParams& p,
                             const std::optional<Vector>& psi_i = std::nullopt,
                             double dt_override = 0.0);

struct FidelityMapRow {
    double gamma, gamma_M;  // rad/ns
    double F;
};
std::vector<FidelityMapRow> fidelity_map(const std::vector<double>& gammas,
                                         const std::vector<double>& gamma_Ms,
                                         const EffectiveSystemParams& p);

// C = K_ab^2 / (gamma_M gamma). Throws DivisionByZeroRateError.
double cooperativity(double k_ab, double gamma, double gamma_M);

struct LeakageOptions {
    double phase_step = 0.6;   // max |eigenfrequency| * dt per RK4 step
    int samples = 1200;
    int max_refinements = 2;
    double refine_tol = 1e-4;  // allowed change of max leakage between refinements
    bool refine = true;
};

struct LeakageResult {
    std::vector<double> times;
    std::vector<double> leakage;
    double max_leakage = 0.0;
    double max_trace_drift = 0.0;
    double max_completeness_defect = 0.0;  // |Tr[P rho P] + Tr[Q rho Q] - 1|
    long steps = 0;
    double t_g = 0.0;
};

// 32-dimensional lab-frame leakage run: four-level qubits (eigen4 number
// operators) coupled to the two-singlet mediator, dephasing operators
// diag(+1,+1,-1,-1) per qubit (e vs g branch) and tau_z for the mediator.
// qubit_z4 overrides the four-dimensional dephasing counterpart.
LeakageResult leakage_simulation(const RxEigenmodel& a, const RxEigenmodel& b, double omega_s,
                                 const DriveParams& drv, const CouplingStrengths& cpl,
                                 const NoiseParams& noise, double t_max,
                                 const LeakageOptions& opt = {},
                                 const Matrix* qubit_z4 = nullptr);

}  // namespace qde
