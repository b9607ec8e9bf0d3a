#pragma once

#include <vector>

#include "qde/operator_algebra.hpp"

namespace qde {

// Triple-dot Hubbard parameters for one resonant exchange qubit. All energies
// in rad/ns. delta is the half-width of the (1,1,1) region, delta = U - 2V - V_m;
// epsilon = -(eps1 - eps3)/2 is the outer-dot detuning (0 at the symmetric point).
struct RxParams {
    double delta = 0.0;
    double t_c = 0.0;
    double epsilon = 0.0;
    double t_l = -1.0;  // default to t_c when negative
    double t_r = -1.0;

    double tl() const { return t_l < 0.0 ? t_c : t_l; }
    double tr() const { return t_r < 0.0 ? t_c : t_r; }

    static RxParams from_hubbard(double u, double v, double v_m, double eps1, double eps3,
                                 double t_l, double t_r);
};

// Exact eigenstructure of the symmetric operating point. Basis order of the
// eigenvector columns: {|->_e, |+>_e, |->_g, |+>_g}, expressed in the
// symmetrized basis {|e0>, |s+>, |g0>, |s->}. Logical states: |1> = |->_e,
// |0> = |->_g.
struct RxEigenmodel {
    double delta = 0.0;
    double t_c = 0.0;
    double theta_e = 0.0;
    double theta_g = 0.0;
    double omega_e = 0.0;  // sqrt(delta^2 + 2 t_c^2)
    double omega_g = 0.0;  // sqrt(delta^2 + 6 t_c^2)
    double omega = 0.0;    // (omega_g - omega_e)/2, qubit frequency
    double q0 = 0.0;
    double qz = 0.0;
    double qx = 0.0;
    Matrix eigenvectors;   // 4x4 unitary
};

// 4x4 Hubbard Hamiltonian in the basis {|e0>, |g0>, |s1,-1/2>, |s3,-1/2>}.
Matrix build_hubbard(const RxParams& p);

// Throws NonSymmetricPointError unless p.epsilon == 0.
RxEigenmodel solve_symmetric(const RxParams& p);

// (q0, qz, qx), dimensionless
struct ChargeCoefficients {
    double q0, qz, qx;
};
ChargeCoefficients charge_coefficients(const RxEigenmodel& m);

enum class RxBasis { original, symmetrized, eigen4, qubit2 };

// Number operator for outer dot 1 or 3 in the requested basis. qubit2 is the
// effective two-level form q0*1 - qz*sz + qx*sx for dot 1 (- qx*sx for dot 3).
Matrix number_operator(const RxEigenmodel& m, int which_dot, RxBasis basis);

struct SpectrumRow {
    double delta_over_tc;
    double e1, e2, e3, e4;  // -omega_g/2, -omega_e/2, +omega_e/2, +omega_g/2 in units of t_c
};
std::vector<SpectrumRow> spectrum_sweep(double t_c, const std::vector<double>& delta_over_tc);

// Perturbative RX frequency t_c^2/delta. Diagnostic only; gate pipelines use
// the exact (omega_g - omega_e)/2.
double perturbative_omega(const RxParams& p);

}  // namespace qde
