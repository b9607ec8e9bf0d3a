#include "qde/mediator_dot.hpp"

#include <cmath>

#include "qde/units.hpp"

namespace qde {

MediatorParams MediatorParams::from_splittings(double omega_s, double j_c, double lambda_nm) {
    return {omega_s, omega_s - 2.0 * j_c, lambda_nm};
}

MediatorParams MediatorParams::from_raw(double eps_c1, double eps_c2, double u_c, double k_c,
                                        double j_c, double lambda_nm) {
    const double omega_s = -(eps_c2 - eps_c1) - u_c + k_c + j_c;
    return {omega_s, omega_s - 2.0 * j_c, lambda_nm};
}

double rabi_frequency(double lambda_nm, double field_V_per_m) {
    // e * lambda * E in eV: lambda[nm] * E[V/m] * 1e-9
    return units::from_eV(lambda_nm * field_V_per_m * 1e-9);
}

DriveParams::DriveParams(double lambda_nm, double field, double omega_d_, double phi_)
    : field_V_per_m(field), omega_d(omega_d_), phi(phi_), rabi(rabi_frequency(lambda_nm, field)) {}

std::pair<Complex, Complex> dipole_matrix_elements(double lambda_nm) {
    if (lambda_nm <= 0.0)
        throw GeometryOutOfRangeError("dipole_matrix_elements: lambda must be positive");
    const double v = lambda_nm / std::sqrt(2.0);
    return {Complex(v, 0.0), Complex(0.0, -v)};
}

Matrix build_static_5(const MediatorParams& p) {
    Matrix h = Matrix::Zero(5, 5);
    h(1, 1) = p.omega_s;
    h(2, 2) = h(3, 3) = h(4, 4) = p.delta_T;
    return h;
}

Matrix rwa_rotating_5(const MediatorParams& p, const DriveParams& d, bool* warned) {
    const double delta_s = p.omega_s - d.omega_d;
    if (warned) *warned = std::abs(delta_s) > 0.1 * std::abs(d.omega_d);
    Matrix h = Matrix::Zero(5, 5);
    h(1, 1) = delta_s;
    h(0, 1) = h(1, 0) = d.rabi / 2.0;
    h(2, 2) = h(3, 3) = h(4, 4) = p.delta_T - d.omega_d;
    return h;
}

TwoLevelValidity two_level_validity(const MediatorParams& p, const DriveParams& d) {
    const double gap = std::abs(p.delta_T - d.omega_d);
    const double ratio = (gap == 0.0) ? std::numeric_limits<double>::infinity() : d.rabi / gap;
    return {ratio, ratio < 0.1, ratio >= 0.1 && ratio < 0.3};
}

Matrix DrivenTwoLevel::hamiltonian(double t_ns) const {
    return 0.5 * omega_s * pauli_z() + rabi * std::cos(omega_d * t_ns + phi) * pauli_x();
}

Matrix DrivenTwoLevel::n_c1() const { return 1.5 * identity(2) - 0.5 * pauli_z(); }
Matrix DrivenTwoLevel::n_c2() const { return 0.5 * identity(2) + 0.5 * pauli_z(); }

DrivenTwoLevel effective_two_level(const MediatorParams& p, const DriveParams& d) {
    const auto v = two_level_validity(p, d);
    if (!v.pass)
        throw ValidityViolationError("effective_two_level: rabi/|delta_T - omega_d| = " +
                                     std::to_string(v.ratio) + " >= 0.1");
    return {p.omega_s, d.rabi, d.omega_d, d.phi};
}

}  // namespace qde
