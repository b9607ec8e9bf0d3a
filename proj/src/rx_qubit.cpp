#include "qde/rx_qubit.hpp"

#include <cmath>

namespace qde {

RxParams RxParams::from_hubbard(double u, double v, double v_m, double eps1, double eps3,
                                double t_l, double t_r) {
    RxParams p;
    p.delta = u - 2.0 * v - v_m;
    p.epsilon = -0.5 * (eps1 - eps3);
    p.t_c = 0.5 * (t_l + t_r);
    p.t_l = t_l;
    p.t_r = t_r;
    return p;
}

Matrix build_hubbard(const RxParams& p) {
    const double tl = p.tl(), tr = p.tr();
    const double s3 = std::sqrt(3.0);
    Matrix h = Matrix::Zero(4, 4);
    h(0, 2) = -tl / 2.0;
    h(0, 3) = -tr / 2.0;
    h(1, 2) = -s3 * tl / 2.0;
    h(1, 3) = s3 * tr / 2.0;
    h(2, 2) = p.delta + p.epsilon;
    h(3, 3) = p.delta - p.epsilon;
    h(2, 0) = h(0, 2);
    h(3, 0) = h(0, 3);
    h(2, 1) = h(1, 2);
    h(3, 1) = h(1, 3);
    return h;
}

RxEigenmodel solve_symmetric(const RxParams& p) {
    if (p.epsilon != 0.0)
        throw NonSymmetricPointError("solve_symmetric: requires epsilon = 0");
    RxEigenmodel m;
    m.delta = p.delta;
    m.t_c = p.t_c;
    m.theta_e = std::atan2(std::sqrt(2.0) * p.t_c, p.delta);
    m.theta_g = std::atan2(std::sqrt(6.0) * p.t_c, p.delta);
    m.omega_e = std::sqrt(p.delta * p.delta + 2.0 * p.t_c * p.t_c);
    m.omega_g = std::sqrt(p.delta * p.delta + 6.0 * p.t_c * p.t_c);
    m.omega = 0.5 * (m.omega_g - m.omega_e);

    const auto q = charge_coefficients(m);
    m.q0 = q.q0;
    m.qz = q.qz;
    m.qx = q.qx;

    // columns {|->_e, |+>_e, |->_g, |+>_g} in {|e0>, |s+>, |g0>, |s->}
    const double ce = std::cos(m.theta_e / 2.0), se = std::sin(m.theta_e / 2.0);
    const double cg = std::cos(m.theta_g / 2.0), sg = std::sin(m.theta_g / 2.0);
    Matrix v = Matrix::Zero(4, 4);
    v(0, 0) = ce;
    v(1, 0) = se;
    v(0, 1) = -se;
    v(1, 1) = ce;
    v(2, 2) = cg;
    v(3, 2) = sg;
    v(2, 3) = -sg;
    v(3, 3) = cg;
    m.eigenvectors = v;
    return m;
}

ChargeCoefficients charge_coefficients(const RxEigenmodel& m) {
    const double ce = std::cos(m.theta_e), cg = std::cos(m.theta_g);
    ChargeCoefficients q;
    q.q0 = 1.25 - (ce + cg) / 8.0;
    q.qz = (ce - cg) / 8.0;
    q.qx = 0.5 * std::sin(m.theta_e / 2.0) * std::sin(m.theta_g / 2.0);
    return q;
}

Matrix number_operator(const RxEigenmodel& m, int which_dot, RxBasis basis) {
    if (which_dot != 1 && which_dot != 3)
        throw DimMismatchError("number_operator: dot index must be 1 or 3");
    const double sign = (which_dot == 1) ? 1.0 : -1.0;

    switch (basis) {
        case RxBasis::original: {
            Matrix n = Matrix::Identity(4, 4);
            n(which_dot == 1 ? 2 : 3, which_dot == 1 ? 2 : 3) = 2.0;
            return n;
        }
        case RxBasis::symmetrized: {
            Matrix n = Matrix::Identity(4, 4);
            n(1, 1) = 1.5;
            n(3, 3) = 1.5;
            n(1, 3) = sign * 0.5;
            n(3, 1) = sign * 0.5;
            return n;
        }
        case RxBasis::eigen4: {
            const Matrix nsym = number_operator(m, which_dot, RxBasis::symmetrized);
            return m.eigenvectors.adjoint() * nsym * m.eigenvectors;
        }
        case RxBasis::qubit2: {
            return m.q0 * identity(2) - m.qz * pauli_z() + sign * m.qx * pauli_x();
        }
    }
    throw Error("number_operator: unknown basis");
}

std::vector<SpectrumRow> spectrum_sweep(double t_c, const std::vector<double>& delta_over_tc) {
    std::vector<SpectrumRow> rows;
    rows.reserve(delta_over_tc.size());
    for (double x : delta_over_tc) {
        const double oe = std::sqrt(x * x + 2.0);
        const double og = std::sqrt(x * x + 6.0);
        (void)t_c;  // energies reported in units of t_c
        rows.push_back({x, -og / 2.0, -oe / 2.0, oe / 2.0, og / 2.0});
    }
    return rows;
}

double perturbative_omega(const RxParams& p) { return p.t_c * p.t_c / p.delta; }

}  // namespace qde
