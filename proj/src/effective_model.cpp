#include "qde/effective_model.hpp"

#include <cmath>

#include "qde/units.hpp"

namespace qde {

namespace {
const std::vector<Eigen::Index> kDims{2, 2, 2};
}

double EffectiveSystemParams::t_g() const { return units::pi / (4.0 * K_ab); }

Matrix qubit_op8(int which_qubit, const Matrix& op2) {
    return embed(op2, which_qubit == 0 ? 0 : 1, kDims);
}

Matrix mediator_op8(const Matrix& op2) { return embed(op2, 2, kDims); }

Matrix u_s8() {
    // exp(-i pi tau_y/4) on the mediator slot
    Matrix u(2, 2);
    const double c = std::cos(units::pi / 4.0), s = std::sin(units::pi / 4.0);
    u << c, -s, s, c;
    return mediator_op8(u);
}

Matrix u_q8() {
    Matrix u(2, 2);
    const double c = std::cos(units::pi / 4.0), s = std::sin(units::pi / 4.0);
    u << c, -s, s, c;
    return kron(kron(u, u), identity(2));
}

Matrix u_d8(double theta_s, double theta_d) {
    const Matrix gen = 0.25 * ((theta_s + theta_d) * qubit_op8(0, pauli_z()) +
                               (theta_s - theta_d) * qubit_op8(1, pauli_z())) *
                       mediator_op8(pauli_y());
    return propagator(gen, 1.0);
}

double solve_omega_s_for_r(const RxEigenmodel& a, const RxEigenmodel& b,
                           const CouplingStrengths& cpl, double omega_M, int r) {
    const double omega_a_pr = a.omega - 2.0 * a.qz * cpl.K0;
    const double omega_b_pr = b.omega - 2.0 * b.qz * cpl.K0;
    if (std::abs(omega_a_pr - omega_b_pr) >
        1e-9 * std::max(std::abs(omega_a_pr), std::abs(omega_b_pr)))
        throw ConditionViolationError(
            "solve_omega_s_for_r: delta_a = delta_b requires identical shifted qubit frequencies");
    const auto q = qubit_qubit_strength(cpl, a.qz, b.qz, omega_M);
    const double delta = 8.0 * r * q.K_ab;
    const double omega_s = omega_a_pr - delta - (a.q0 + b.q0) * cpl.DeltaK;
    if (omega_s <= 0.0)
        throw ConditionViolationError("solve_omega_s_for_r: implied omega_s is not positive");
    return omega_s;
}

EffectiveSystemParams shifted_frequencies(const RxEigenmodel& a, const RxEigenmodel& b,
                                          double omega_s, const DriveParams& drv,
                                          const CouplingStrengths& cpl) {
    EffectiveSystemParams p{};
    p.omega_s = omega_s;
    p.Omega_M = drv.rabi;
    p.phi = drv.phi;
    p.q0_a = a.q0;
    p.q0_b = b.q0;
    p.qz_a = a.qz;
    p.qz_b = b.qz;
    p.qx_a = a.qx;
    p.qx_b = -b.qx;
    p.K0 = cpl.K0;
    p.DeltaK = cpl.DeltaK;
    p.K_m = cpl.K_m;

    p.omega_a_pr = a.omega - 2.0 * a.qz * cpl.K0;
    p.omega_b_pr = b.omega - 2.0 * b.qz * cpl.K0;
    p.omega_s_pr = omega_s + (a.q0 + b.q0) * cpl.DeltaK;

    // the cascade treats only the resonantly driven mediator dot
    p.omega_d = p.omega_s_pr;
    if (drv.omega_d > 0.0 && std::abs(drv.omega_d - p.omega_s_pr) > 1e-9 * p.omega_s_pr)
        throw ValidityViolationError(
            "shifted_frequencies: off-resonant mediator drive rejected (omega_d must equal omega'_s)");

    p.delta_a = p.omega_a_pr - p.omega_d;
    p.delta_b = p.omega_b_pr - p.omega_d;

    const auto q = qubit_qubit_strength(cpl, a.qz, b.qz, drv.rabi);
    p.Omega_s = q.Omega_s;
    p.Omega_d = q.Omega_d;
    p.Omega_M_prime = q.Omega_M_prime;
    p.K_ab = q.K_ab;
    p.theta_s = std::atan2((a.qz + b.qz) * cpl.DeltaK, drv.rabi);
    p.theta_d = std::atan2((a.qz - b.qz) * cpl.DeltaK, drv.rabi);
    return p;
}

Matrix build_h_l_eff(const RxEigenmodel& a, const RxEigenmodel& b, double omega_s,
                     const DriveParams& drv, const CouplingStrengths& cpl, double t_ns) {
    const Matrix za = qubit_op8(0, pauli_z()), zb = qubit_op8(1, pauli_z());
    const Matrix xa = qubit_op8(0, pauli_x()), xb = qubit_op8(1, pauli_x());
    const Matrix tz = mediator_op8(pauli_z()), tx = mediator_op8(pauli_x());
    const Matrix one = identity(8);

    Matrix h = 0.5 * a.omega * za + 0.5 * b.omega * zb + 0.5 * omega_s * tz +
               drv.rabi * std::cos(drv.omega_d * t_ns + drv.phi) * tx;
    const Matrix med = cpl.K0 * one + 0.5 * cpl.DeltaK * tz - cpl.K_m * tx;
    h += (a.q0 * one - a.qz * za - a.qx * xa) * med;    // dot a3: -qx sigma_x
    h += (b.q0 * one - b.qz * zb - (-b.qx) * xb) * med;  // dot b1: +qx sigma_x
    return h;
}

FrameHamiltonian lab_frame(const RxEigenmodel& a, const RxEigenmodel& b, double omega_s,
                           const DriveParams& drv, const CouplingStrengths& cpl) {
    FrameHamiltonian fh;
    fh.frame = Frame::lab;
    fh.time_dependent = true;
    fh.generator = [=](double t) { return build_h_l_eff(a, b, omega_s, drv, cpl, t); };
    fh.matrix = fh.generator(0.0);
    return fh;
}

FrameHamiltonian rotating_frame(const EffectiveSystemParams& p, RwaAudit* audit) {
    if (p.Omega_M <= 0.0)
        throw ValidityViolationError("rotating_frame: the cascade is drive-activated; Omega_M = 0 refused");
    if (p.Omega_M / p.omega_d > 0.1)
        throw ValidityViolationError("rotating_frame: Omega_M/omega_d = " +
                                     std::to_string(p.Omega_M / p.omega_d) + " > 0.1");

    const Matrix za = qubit_op8(0, pauli_z()), zb = qubit_op8(1, pauli_z());
    const Matrix tz = mediator_op8(pauli_z()), tx = mediator_op8(pauli_x());
    const Matrix sp_a = qubit_op8(0, pauli_plus()), sm_a = qubit_op8(0, pauli_minus());
    const Matrix sp_b = qubit_op8(1, pauli_plus()), sm_b = qubit_op8(1, pauli_minus());
    const Matrix tp = mediator_op8(pauli_plus()), tm = mediator_op8(pauli_minus());

    Matrix h = 0.5 * p.delta_a * za + 0.5 * p.delta_b * zb + 0.5 * p.Omega_M * tx;
    h -= 0.5 * p.DeltaK * (p.qz_a * za + p.qz_b * zb) * tz;
    h += p.K_m * (p.qx_a * (sp_a * tm + sm_a * tp) + p.qx_b * (sp_b * tm + sm_b * tp));

    if (audit) {
        audit->terms.clear();
        auto add = [&](const std::string& f, double amp, double freq, bool dropped) {
            audit->terms.push_back({f, std::abs(amp), freq, dropped});
        };
        // counter-rotating terms dropped for Omega_M << omega_d
        add("e^{+-2i w_d t}", 0.5 * p.Omega_M, 2.0 * p.omega_d, true);          // drive tau+-
        add("e^{+-i w_d t}", p.q0_a * p.K_m + p.q0_b * p.K_m, p.omega_d, true); // q0 K_m tau_x
        add("e^{+-i w_d t}", 0.5 * p.qz_a * p.K_m, p.omega_d, true);            // qz sigma_z K_m tau_x
        add("e^{+-i w_d t}", 0.5 * p.qz_b * p.K_m, p.omega_d, true);
        add("e^{+-i w_d t}", p.qx_a * p.K0, p.omega_d, true);                   // qx sigma_x K0
        add("e^{+-i w_d t}", p.qx_b * p.K0, p.omega_d, true);
        add("e^{+-i w_d t}", 0.5 * p.qx_a * p.DeltaK, p.omega_d, true);         // qx sigma_x DK tau_z
        add("e^{+-i w_d t}", 0.5 * p.qx_b * p.DeltaK, p.omega_d, true);
        add("e^{+-2i w_d t}", 0.5 * p.qx_a * p.K_m, 2.0 * p.omega_d, true);     // co-rotating pair of
        add("e^{+-2i w_d t}", 0.5 * p.qx_b * p.K_m, 2.0 * p.omega_d, true);     // qx sigma_x K_m tau_x
        add("static", 0.5 * p.qx_a * p.K_m, 0.0, false);                        // kept flip-flop
        add("static", 0.5 * p.qx_b * p.K_m, 0.0, false);
        audit->max_ratio = p.Omega_M / p.omega_d;
        audit->pass = audit->max_ratio < 0.1;
    }
    return {Frame::rotating, h, false, {}};
}

FrameHamiltonian dressed_singlet_frame(const FrameHamiltonian& rotating) {
    const Matrix us = u_s8();
    return {Frame::dressed_singlet, us.adjoint() * rotating.matrix * us, false, {}};
}

FrameHamiltonian rwa_reduce(const FrameHamiltonian& dressed, const EffectiveSystemParams& p,
                            RwaAudit* audit) {
    (void)dressed;
    const Matrix za = qubit_op8(0, pauli_z()), zb = qubit_op8(1, pauli_z());
    const Matrix tz = mediator_op8(pauli_z()), tx = mediator_op8(pauli_x());

    Matrix h = 0.5 * p.delta_a * za + 0.5 * p.delta_b * zb + 0.5 * p.Omega_M * tz;
    h += 0.5 * p.DeltaK * (p.qz_a * za + p.qz_b * zb) * tx;

    const double ra = std::abs(p.delta_a), rb = std::abs(p.delta_b);
    double max_ratio = 0.0;
    for (double d : {ra, rb, std::abs(ra - p.Omega_M), std::abs(ra + p.Omega_M),
                     std::abs(rb - p.Omega_M), std::abs(rb + p.Omega_M)})
        max_ratio = std::max(max_ratio, p.Omega_M / d);
    if (max_ratio >= 0.1)
        throw ValidityViolationError("rwa_reduce: Omega_M/|delta +- Omega_M| = " +
                                     std::to_string(max_ratio) + " >= 0.1");

    if (audit) {
        audit->terms.clear();
        const double amp_a = 0.5 * p.K_m * std::abs(p.qx_a);
        const double amp_b = 0.5 * p.K_m * std::abs(p.qx_b);
        audit->terms.push_back({"e^{+-i Omega_M t}", 0.5 * p.DeltaK * p.qz_a, p.Omega_M, false});
        audit->terms.push_back({"e^{+-i Omega_M t}", 0.5 * p.DeltaK * p.qz_b, p.Omega_M, false});
        audit->terms.push_back({"e^{+-i delta_a t}", amp_a, std::abs(p.delta_a), true});
        audit->terms.push_back({"e^{+-i delta_b t}", amp_b, std::abs(p.delta_b), true});
        audit->terms.push_back(
            {"e^{+-i(delta_a+Omega_M) t}", amp_a, std::abs(p.delta_a + p.Omega_M), true});
        audit->terms.push_back(
            {"e^{+-i(delta_a-Omega_M) t}", amp_a, std::abs(p.delta_a - p.Omega_M), true});
        audit->terms.push_back(
            {"e^{+-i(delta_b+Omega_M) t}", amp_b, std::abs(p.delta_b + p.Omega_M), true});
        audit->terms.push_back(
            {"e^{+-i(delta_b-Omega_M) t}", amp_b, std::abs(p.delta_b - p.Omega_M), true});
        audit->max_ratio = max_ratio;
        audit->pass = max_ratio < 0.1;
        // second-order level shifts implied by the dropped flip-flop terms
        auto shift = [&](double amp, double delta) {
            return amp * amp * (1.0 / delta + 0.5 / (delta + p.Omega_M) + 0.5 / (delta - p.Omega_M));
        };
        audit->delta_shift_a = 2.0 * shift(amp_a, std::abs(p.delta_a));
        audit->delta_shift_b = 2.0 * shift(amp_b, std::abs(p.delta_b));
    }
    return {Frame::rwa, h, false, {}};
}

DiagonalizedFrame conditional_diagonalize(const FrameHamiltonian& rwa,
                                          const EffectiveSystemParams& p) {
    if (p.Omega_M <= 0.0)
        throw ValidityViolationError("conditional_diagonalize: requires Omega_M > 0");
    DiagonalizedFrame out;
    out.theta_s = p.theta_s;
    out.theta_d = p.theta_d;
    out.u_d = u_d8(p.theta_s, p.theta_d);
    out.fh.frame = Frame::diagonalized;
    out.fh.matrix = out.u_d.adjoint() * rwa.matrix * out.u_d;
    out.fh.time_dependent = false;
    return out;
}

Matrix low_energy_two_qubit(const EffectiveSystemParams& p, int branch) {
    const std::vector<Eigen::Index> dims{2, 2};
    const Matrix za = embed(pauli_z(), 0, dims), zb = embed(pauli_z(), 1, dims);
    return 0.5 * p.delta_a * za + 0.5 * p.delta_b * zb + branch * p.K_ab * za * zb;
}

DressedQubitModel dressed_qubit_model(const FrameHamiltonian& diagonalized,
                                      const EffectiveSystemParams& p) {
    DressedQubitModel out;
    out.u_q = u_q8();
    out.fh.frame = Frame::dressed_qubit;
    out.fh.matrix = out.u_q.adjoint() * diagonalized.matrix * out.u_q;
    out.fh.time_dependent = false;

    const std::vector<Eigen::Index> dims{2, 2};
    const Matrix xa = embed(pauli_x(), 0, dims), xb = embed(pauli_x(), 1, dims);
    out.h_minus = -0.5 * p.delta_a * xa - 0.5 * p.delta_b * xb - p.K_ab * xa * xb;
    return out;
}

Matrix gate_unitary(double k_ab, double delta_a, double delta_b, double t_ns) {
    const std::vector<Eigen::Index> dims{2, 2};
    const Matrix xa = embed(pauli_x(), 0, dims), xb = embed(pauli_x(), 1, dims);
    const Matrix h = -0.5 * delta_a * xa - 0.5 * delta_b * xb - k_ab * xa * xb;
    return propagator(h, t_ns);
}

Matrix gate_target() {
    Matrix u(4, 4);
    const Complex i(0.0, 1.0);
    u << 1, 0, 0, i, 0, 1, i, 0, 0, i, 1, 0, i, 0, 0, 1;
    return u / std::sqrt(2.0);
}

GateConditions gate_conditions(double k_ab, double delta_a, double delta_b, double t_ns,
                               double tol) {
    GateConditions c;
    c.m_real = (4.0 * k_ab * t_ns / units::pi - 1.0) / 8.0;
    c.r_a_real = delta_a / (8.0 * k_ab);
    c.r_b_real = delta_b / (8.0 * k_ab);
    auto near_int = [tol](double x) { return std::abs(x - std::round(x)) < tol; };
    c.ok = near_int(c.m_real) && near_int(c.r_a_real) && near_int(c.r_b_real) &&
           near_int(c.r_a_real - c.r_b_real) && std::abs(c.r_a_real - c.r_b_real) < tol;
    return c;
}

}  // namespace qde
