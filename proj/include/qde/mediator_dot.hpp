#pragma once

#include <utility>

#include "qde/operator_algebra.hpp"

namespace qde {

// Two-level, two-electron mediator dot. omega_s is the S11-S12 singlet
// splitting, delta_T = omega_s - 2 J_c the singlet-triplet gap. Both rad/ns.
struct MediatorParams {
    double omega_s = 0.0;
    double delta_T = 0.0;
    double lambda_nm = 0.0;

    static MediatorParams from_splittings(double omega_s, double j_c, double lambda_nm);
    // omega_s = -(eps_c2 - eps_c1) - U_c + K_c + J_c, delta_T = omega_s - 2 J_c
    static MediatorParams from_raw(double eps_c1, double eps_c2, double u_c, double k_c,
                                   double j_c, double lambda_nm);
    double j_c() const { return 0.5 * (omega_s - delta_T); }
};

// ac electric-field drive on the mediator dot. rabi = e * lambda * E_M in rad/ns.
struct DriveParams {
    double field_V_per_m = 0.0;
    double omega_d = 0.0;  // rad/ns
    double phi = 0.0;
    double rabi = 0.0;

    DriveParams() = default;
    DriveParams(double lambda_nm, double field_V_per_m, double omega_d, double phi = 0.0);
};

// Rabi frequency e*lambda*E for a dot of size lambda_nm, field in V/m.
double rabi_frequency(double lambda_nm, double field_V_per_m);

// Fock-Darwin transition dipole elements (<c2|x|c1>, <c2|y|c1>) in nm:
// (lambda/sqrt(2), -i lambda/sqrt(2)). Diagonal elements vanish by parity.
std::pair<Complex, Complex> dipole_matrix_elements(double lambda_nm);

// diag(0, omega_s, delta_T, delta_T, delta_T) in {S11, S12, T-, T0, T+}
Matrix build_static_5(const MediatorParams& p);

// Rotating-frame RWA Hamiltonian in the same 5-state basis:
// Delta_s |S12><S12| + (rabi/2)(|S12><S11| + h.c.) + (delta_T - omega_d) P_T.
// Sets *warned when |Delta_s| > 0.1 omega_d.
Matrix rwa_rotating_5(const MediatorParams& p, const DriveParams& d, bool* warned = nullptr);

struct TwoLevelValidity {
    double ratio;  // rabi / |delta_T - omega_d|
    bool pass;     // ratio < 0.1
    bool warn;     // ratio in [0.1, 0.3)
};
TwoLevelValidity two_level_validity(const MediatorParams& p, const DriveParams& d);

// Driven two-level singlet description, basis {|S12>, |S11>} with
// tau_z |S12> = +|S12>. H(t) = (omega_s/2) tau_z + rabi cos(omega_d t + phi) tau_x.
struct DrivenTwoLevel {
    double omega_s, rabi, omega_d, phi;
    Matrix hamiltonian(double t_ns) const;
    Matrix n_c1() const;  // (3/2) 1 - (1/2) tau_z
    Matrix n_c2() const;  // (1/2) 1 + (1/2) tau_z
};

// Throws ValidityViolationError when two_level_validity fails.
DrivenTwoLevel effective_two_level(const MediatorParams& p, const DriveParams& d);

}  // namespace qde
