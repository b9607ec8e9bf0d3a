#include "qde/coulomb_coupling.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "qde/mediator_dot.hpp"
#include "qde/units.hpp"

namespace qde {

namespace {

// e^2/(4 pi eps) in rad/ns * nm
double coulomb_prefactor(double relative_permittivity) {
    return units::from_eV(units::coulomb_eV_nm) / relative_permittivity;
}

}  // namespace

GeometryCheck check_geometry(const GeometryParams& g) {
    GeometryCheck c;
    c.lambda_over_2a = g.lambda_nm / (2.0 * g.a_nm);
    c.ok = c.lambda_over_2a < 0.5;
    c.warn_expansion = c.lambda_over_2a > 0.25;
    c.warn_sigma = g.sigma_nm > g.lambda_nm / 4.0;
    return c;
}

CouplingStrengths multipole_strengths(const GeometryParams& g) {
    const auto check = check_geometry(g);
    if (!check.ok)
        throw GeometryOutOfRangeError("multipole_strengths: lambda/2a = " +
                                      std::to_string(check.lambda_over_2a) + " >= 0.5");
    const double ce = coulomb_prefactor(g.relative_permittivity);
    const double a = g.a_nm, l = g.lambda_nm;
    CouplingStrengths s;
    s.K1 = ce * (1.0 / a + l * l / (2.0 * a * a * a));
    s.K2 = ce * (1.0 / a + l * l / (a * a * a));
    s.K0 = (3.0 * s.K1 + s.K2) / 2.0;
    s.DeltaK = s.K2 - s.K1;
    s.kappa = ce * l / (std::sqrt(2.0) * a * a);
    s.K_m = std::sqrt(2.0) * s.kappa;
    return s;
}

// The 2D charge densities are circularly symmetric (c1, qubit dot) or carry a
// single angular harmonic (c1-c2 cross density), so the Coulomb double
// integral collapses to a radial integral over the 2D Fourier variable k:
//   K1' = int_0^inf e^{-k^2 (sigma^2+lambda^2)/2} J0(k a) dk
//   K2' = int_0^inf (1 - k^2 lambda^2/2) e^{-k^2 (sigma^2+lambda^2)/2} J0(k a) dk
//   kappa' = (lambda/sqrt(2)) int_0^inf k e^{-k^2 (sigma^2+lambda^2)/2} J1(k a) dk
double numeric_coulomb_oracle(const GeometryParams& g, CoulombElement which) {
    const double l2 = g.lambda_nm * g.lambda_nm;
    const double p = 0.5 * (g.sigma_nm * g.sigma_nm + l2);
    const double a = g.a_nm;

    auto integrand = [&](double k) -> double {
        const double gauss = std::exp(-p * k * k);
        switch (which) {
            case CoulombElement::K1:
                return gauss * std::cyl_bessel_j(0, k * a);
            case CoulombElement::K2:
                return (1.0 - 0.5 * k * k * l2) * gauss * std::cyl_bessel_j(0, k * a);
            case CoulombElement::kappa:
                return (g.lambda_nm / std::sqrt(2.0)) * k * gauss * std::cyl_bessel_j(1, k * a);
        }
        return 0.0;
    };

    // Gaussian factor truncates the tail; 12/sqrt(p) leaves e^{-144}.
    const double k_max = 12.0 / std::sqrt(p);
    double error = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, k_max, 12, 1e-7, &error);
    if (!(std::abs(value) > 0.0) || error > 1e-4 * std::abs(value))
        throw QuadratureNonConvergenceError(
            "numeric_coulomb_oracle: adaptive refinement failed at 1e-4 relative");
    return coulomb_prefactor(g.relative_permittivity) * value;
}

QubitQubitStrength qubit_qubit_strength(const CouplingStrengths& c, double qz_a, double qz_b,
                                        double omega_M) {
    if (omega_M <= 0.0)
        throw ValidityViolationError("qubit_qubit_strength: requires Omega_M > 0");
    QubitQubitStrength q;
    q.Omega_s = std::hypot(omega_M, (qz_a + qz_b) * c.DeltaK);
    q.Omega_d = std::hypot(omega_M, (qz_a - qz_b) * c.DeltaK);
    q.K_ab = (q.Omega_s - q.Omega_d) / 4.0;
    q.Omega_M_prime = (q.Omega_s + q.Omega_d) / 2.0;
    return q;
}

std::vector<CouplingSweepRow> coupling_sweep(const std::vector<double>& lambdas_nm,
                                             const std::vector<double>& a_values_nm,
                                             double field_V_per_m, double qz_a, double qz_b,
                                             double sigma_nm, double relative_permittivity) {
    std::vector<double> as = a_values_nm;
    std::sort(as.begin(), as.end());
    std::vector<double> ls = lambdas_nm;
    std::sort(ls.begin(), ls.end());

    std::vector<CouplingSweepRow> rows;
    rows.reserve(as.size() * ls.size());
    for (double a : as) {
        for (double l : ls) {
            CouplingSweepRow row{};
            row.lambda_nm = l;
            row.a_nm = a;
            if (l == 0.0) {
                // monopole limit: DeltaK = 0, no drive dipole, K_ab = 0
                GeometryParams g{1e-6, a, sigma_nm, relative_permittivity};
                const auto s = multipole_strengths(g);
                row.K1 = row.K2 = s.K1;
                row.valid = true;
                rows.push_back(row);
                continue;
            }
            GeometryParams g{l, a, sigma_nm, relative_permittivity};
            if (!check_geometry(g).ok) {
                row.valid = false;
                rows.push_back(row);
                continue;
            }
            const auto s = multipole_strengths(g);
            const double omega_M = rabi_frequency(l, field_V_per_m);
            const auto q = qubit_qubit_strength(s, qz_a, qz_b, omega_M);
            row.K1 = s.K1;
            row.K2 = s.K2;
            row.DeltaK = s.DeltaK;
            row.Omega_M = omega_M;
            row.K_ab = q.K_ab;
            row.K_ab_sw = qz_a * qz_b * s.DeltaK * s.DeltaK / (2.0 * omega_M);
            row.valid = true;
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace qde
