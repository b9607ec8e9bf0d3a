#pragma once

#include <vector>

#include "qde/errors.hpp"

namespace qde {

// Dot-array geometry for the multipole coupling model. lambda is the mediator
// dot size, a the qubit-mediator center distance, sigma the qubit outer-dot
// size (used only by the numeric quadrature oracle).
struct GeometryParams {
    double lambda_nm = 200.0;
    double a_nm = 500.0;
    double sigma_nm = 20.0;
    double relative_permittivity = 11.7;  // silicon
};

struct GeometryCheck {
    double lambda_over_2a;
    bool ok;              // lambda/2a < 0.5
    bool warn_expansion;  // lambda/2a > 0.25
    bool warn_sigma;      // sigma > lambda/4
};
GeometryCheck check_geometry(const GeometryParams& g);

// Capacitive coupling strengths, all rad/ns. K0 = (3 K1 + K2)/2,
// DeltaK = K2 - K1, K_m = sqrt(2) kappa.
struct CouplingStrengths {
    double K1, K2, K0, DeltaK, kappa, K_m;
};

// Quadrupole-order multipole result:
//   K1 = (e^2/4 pi eps)(1/a + lambda^2/2a^3)
//   K2 = (e^2/4 pi eps)(1/a + lambda^2/a^3)
//   kappa = (e^2/4 pi eps)(lambda/sqrt(2) a^2)
// Throws GeometryOutOfRangeError when lambda/2a >= 0.5.
CouplingStrengths multipole_strengths(const GeometryParams& g);

enum class CoulombElement { K1, K2, kappa };

// Direct evaluation of the Coulomb matrix element with the full Gaussian /
// Fock-Darwin densities (no multipole truncation). The 4D real-space double
// integral is reduced exactly to a 1D radial (Hankel) integral, evaluated by
// adaptive quadrature at 1e-4 relative tolerance. Result in rad/ns.
double numeric_coulomb_oracle(const GeometryParams& g, CoulombElement which);

// Drive-activated qubit-qubit strength: Omega_{s,d} = sqrt(Omega_M^2 +
// (qz_a +/- qz_b)^2 DeltaK^2), K_ab = (Omega_s - Omega_d)/4,
// Omega_M_prime = (Omega_s + Omega_d)/2.
struct QubitQubitStrength {
    double Omega_s, Omega_d, K_ab, Omega_M_prime;
};
QubitQubitStrength qubit_qubit_strength(const CouplingStrengths& c, double qz_a, double qz_b,
                                        double omega_M);

struct CouplingSweepRow {
    double lambda_nm, a_nm;
    double K1, K2, DeltaK, Omega_M, K_ab;
    double K_ab_sw;  // Schrieffer-Wolff limit qz_a qz_b DeltaK^2 / (2 Omega_M)
    bool valid;      // geometry bound satisfied; invalid rows carry zeros
};

// K_ab(lambda; a) table at fixed drive field. Points violating the geometry
// bound are skipped and flagged. Rows ordered by (a, lambda).
std::vector<CouplingSweepRow> coupling_sweep(const std::vector<double>& lambdas_nm,
                                             const std::vector<double>& a_values_nm,
                                             double field_V_per_m, double qz_a, double qz_b,
                                             double sigma_nm = 20.0,
                                             double relative_permittivity = 11.7);

}  // namespace qde
