#include "qde/lindblad.hpp"

#include <algorithm>
#include <cmath>

#include "qde/units.hpp"

namespace qde {

namespace {

// single fixed-step integration pass
SimulationResult run_pass(const FrameHamiltonian& h, const std::vector<Dissipator>& ds,
                          const Matrix& rho0, double t_end, long steps, const EvolveOptions& opt) {
    SimulationResult res;
    res.steps = steps;
    const double dt = t_end / static_cast<double>(steps);
    Matrix rho = rho0;

    auto full_rhs = [&](double t, const Matrix& r) {
        const Matrix ht = h.time_dependent ? h.generator(t) : h.matrix;
        Matrix out = Complex(0.0, -1.0) * (ht * r - r * ht);
        for (const auto& d : ds) {
            if (d.rate == 0.0) continue;
            const Matrix l = d.time_dependent ? d.op_t(t) : d.op;
            out.noalias() += (0.5 * d.rate) * (l * r * l);
            out -= (0.5 * d.rate) * r;
        }
        return out;
    };

    const long sample_every =
        opt.store_points > 0 ? std::max<long>(1, steps / opt.store_points) : 0;
    if (opt.store_points > 0 && opt.observable) {
        res.times.push_back(0.0);
        res.series.push_back(opt.observable(0.0, rho));
    }

    for (long k = 0; k < steps; ++k) {
        const double t = k * dt;
        const Matrix k1 = full_rhs(t, rho);
        const Matrix k2 = full_rhs(t + 0.5 * dt, rho + (0.5 * dt) * k1);
        const Matrix k3 = full_rhs(t + 0.5 * dt, rho + (0.5 * dt) * k2);
        const Matrix k4 = full_rhs(t + dt, rho + dt * k3);
        rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const double drift = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
        res.max_trace_drift = std::max(res.max_trace_drift, drift);
        if (res.max_trace_drift > opt.trace_tol)
            throw InvariantBreachError("evolve: trace drift " + std::to_string(res.max_trace_drift) +
                                       " exceeds " + std::to_string(opt.trace_tol));
        if (sample_every > 0 && ((k + 1) % sample_every == 0 || k + 1 == steps) && opt.observable) {
            res.times.push_back(t + dt);
            res.series.push_back(opt.observable(t + dt, rho));
        }
    }
    res.final_state = rho;
    return res;
}

}  // namespace

SimulationResult evolve(const FrameHamiltonian& h, const std::vector<Dissipator>& dissipators,
                        const Matrix& rho0, double t_end, const EvolveOptions& opt,
                        const std::function<double(const Matrix&)>& metric) {
    if (opt.dt <= 0.0) throw ConfigError("evolve: options.dt must be positive");
    long steps = std::max<long>(1, static_cast<long>(std::ceil(t_end / opt.dt)));

    SimulationResult prev = run_pass(h, dissipators, rho0, t_end, steps, opt);
    prev.metric = metric ? metric(prev.final_state) : 0.0;
    if (opt.max_refinements == 0) return prev;

    for (int refinement = 1; refinement <= opt.max_refinements; ++refinement) {
        steps *= 2;
        SimulationResult cur = run_pass(h, dissipators, rho0, t_end, steps, opt);
        cur.refinements = refinement;
        cur.metric = metric ? metric(cur.final_state) : 0.0;
        const double change = metric
                                  ? std::abs(cur.metric - prev.metric)
                                  : (cur.final_state - prev.final_state).cwiseAbs().maxCoeff();
        cur.refine_delta = change;
        if (change < opt.refine_tol) return cur;
        prev = std::move(cur);
    }
    throw StepNonConvergenceError("evolve: refinement did not converge below " +
                                  std::to_string(opt.refine_tol));
}

Matrix t_x_operator(const EffectiveSystemParams& p) {
    const double cs = std::cos(p.theta_s), cd = std::cos(p.theta_d);
    const double ss = std::sin(p.theta_s), sd = std::sin(p.theta_d);
    const Matrix za = qubit_op8(0, pauli_z()), zb = qubit_op8(1, pauli_z());
    const Matrix tx = mediator_op8(pauli_x()), tz = mediator_op8(pauli_z());
    return 0.5 * ((cs + cd) * identity(8) + (cs - cd) * za * zb) * tx +
           0.5 * ((ss + sd) * za + (ss - sd) * zb) * tz;
}

Matrix t_x_tilde_operator(const EffectiveSystemParams& p) {
    const double cs = std::cos(p.theta_s), cd = std::cos(p.theta_d);
    const double ss = std::sin(p.theta_s), sd = std::sin(p.theta_d);
    const Matrix xa = qubit_op8(0, pauli_x()), xb = qubit_op8(1, pauli_x());
    const Matrix tx = mediator_op8(pauli_x()), tz = mediator_op8(pauli_z());
    return 0.5 * ((cs + cd) * identity(8) + (cs - cd) * xa * xb) * tx -
           0.5 * ((ss + sd) * xa + (ss - sd) * xb) * tz;
}

std::vector<Dissipator> dissipator_operators(Frame frame, const EffectiveSystemParams& p,
                                             const NoiseParams& noise) {
    const Matrix za = qubit_op8(0, pauli_z()), zb = qubit_op8(1, pauli_z());
    const Matrix xa = qubit_op8(0, pauli_x()), xb = qubit_op8(1, pauli_x());

    std::vector<Dissipator> ds;
    switch (frame) {
        case Frame::lab:
        case Frame::rotating:
            ds.push_back({noise.gamma_a, za, {}, false});
            ds.push_back({noise.gamma_b, zb, {}, false});
            ds.push_back({noise.gamma_M, mediator_op8(pauli_z()), {}, false});
            break;
        case Frame::dressed_singlet:
        case Frame::rwa:
            ds.push_back({noise.gamma_a, za, {}, false});
            ds.push_back({noise.gamma_b, zb, {}, false});
            ds.push_back({noise.gamma_M, mediator_op8(pauli_x()), {}, false});
            break;
        case Frame::diagonalized:
            ds.push_back({noise.gamma_a, za, {}, false});
            ds.push_back({noise.gamma_b, zb, {}, false});
            ds.push_back({noise.gamma_M, t_x_operator(p), {}, false});
            break;
        case Frame::dressed_qubit:
            ds.push_back({noise.gamma_a, xa, {}, false});
            ds.push_back({noise.gamma_b, xb, {}, false});
            ds.push_back({noise.gamma_M, t_x_tilde_operator(p), {}, false});
            break;
        case Frame::interaction: {
            ds.push_back({noise.gamma_a, xa, {}, false});
            ds.push_back({noise.gamma_b, xb, {}, false});
            // T_x'(t) = U_int^dag T~_x U_int, recomputed per evaluation from the
            // cached eigendecomposition of H_0,q.
            const Matrix h0q = -0.5 * p.delta_a * xa - 0.5 * p.delta_b * xb +
                               0.5 * p.Omega_M_prime * mediator_op8(pauli_z());
            const Spectrum s = hermitian_eig(h0q);
            const Matrix txt = t_x_tilde_operator(p);
            Dissipator d;
            d.rate = noise.gamma_M;
            d.time_dependent = true;
            d.op_t = [s, txt](double t) {
                Vector ph(s.eigenvalues.size());
                for (Eigen::Index k = 0; k < ph.size(); ++k)
                    ph(k) = std::exp(Complex(0.0, -s.eigenvalues(k) * t));
                const Matrix u = s.eigenvectors * ph.asDiagonal() * s.eigenvectors.adjoint();
                return (u.adjoint() * txt * u).eval();
            };
            ds.push_back(std::move(d));
            break;
        }
    }
    return ds;
}

FidelityResult gate_fidelity(const NoiseParams& noise, const EffectiveSystemParams& p,
                             const std::optional<Vector>& psi_i, double dt_override) {
    const double t_g = p.t_g();

    // interaction picture: V' = V_q = K_ab x_a x_b tau_z^M, time-independent
    const Matrix vq = p.K_ab * qubit_op8(0, pauli_x()) * qubit_op8(1, pauli_x()) *
                      mediator_op8(pauli_z());
    FrameHamiltonian h{Frame::interaction, vq, false, {}};

    Vector psi = Vector::Zero(8);
    if (psi_i) {
        psi = *psi_i;
    } else {
        psi(3) = 1.0;  // |eg, M_->: (e, g, M_-) = indices (0, 1, 1)
    }
    const Matrix rho0 = psi * psi.adjoint();
    const Matrix u_ideal = propagator(vq, t_g);
    const Matrix rho_ideal = u_ideal * rho0 * u_ideal.adjoint();

    EvolveOptions opt;
    opt.dt = dt_override > 0.0 ? dt_override : t_g / 2000.0;
    const auto ds = dissipator_operators(Frame::interaction, p, noise);
    auto fid = [&rho_ideal](const Matrix& r) { return (rho_ideal * r).trace().real(); };
    SimulationResult sim = evolve(h, ds, rho0, t_g, opt, fid);
    return {sim.metric, t_g, std::move(sim)};
}

std::vector<FidelityMapRow> fidelity_map(const std::vector<double>& gammas,
                                         const std::vector<double>& gamma_Ms,
                                         const EffectiveSystemParams& p) {
    std::vector<FidelityMapRow> rows;
    rows.reserve(gammas.size() * gamma_Ms.size());
    for (double g : gammas)
        for (double gm : gamma_Ms) {
            NoiseParams n{g, g, gm};
            rows.push_back({g, gm, gate_fidelity(n, p).F});
        }
    return rows;
}

double cooperativity(double k_ab, double gamma, double gamma_M) {
    if (gamma == 0.0 || gamma_M == 0.0)
        throw DivisionByZeroRateError("cooperativity: rates must be positive");
    return k_ab * k_ab / (gamma_M * gamma);
}

// ---------------------------------------------------------------------------
// 32-dimensional leakage run
// ---------------------------------------------------------------------------

namespace {

// interaction picture in the eigenbasis of the static Hamiltonian: operators
// acquire elementwise phases e^{i (l_j - l_k) t}
Matrix dress(const Matrix& op, const Vector& ph) {
    return ph.conjugate().asDiagonal() * op * ph.asDiagonal();
}

Vector phases(const RealVector& lambda, double t) {
    Vector ph(lambda.size());
    for (Eigen::Index k = 0; k < ph.size(); ++k) ph(k) = std::exp(Complex(0.0, -lambda(k) * t));
    return ph;
}

}  // namespace

LeakageResult leakage_simulation(const RxEigenmodel& a, const RxEigenmodel& b, double omega_s,
                                 const DriveParams& drv, const CouplingStrengths& cpl,
                                 const NoiseParams& noise, double t_max, const LeakageOptions& opt,
                                 const Matrix* qubit_z4) {
    const std::vector<Eigen::Index> dims{4, 4, 2};

    // static part: eigen4 qubit energies + mediator splitting + capacitive coupling
    auto energies = [](const RxEigenmodel& m) {
        Matrix e = Matrix::Zero(4, 4);
        e(0, 0) = 0.5 * (m.delta - m.omega_e);
        e(1, 1) = 0.5 * (m.delta + m.omega_e);
        e(2, 2) = 0.5 * (m.delta - m.omega_g);
        e(3, 3) = 0.5 * (m.delta + m.omega_g);
        return e;
    };
    const Matrix n_a3 = number_operator(a, 3, RxBasis::eigen4);
    const Matrix n_b1 = number_operator(b, 1, RxBasis::eigen4);
    const Matrix c_med = cpl.K0 * identity(2) + 0.5 * cpl.DeltaK * pauli_z() - cpl.K_m * pauli_x();

    Matrix h_static = embed(energies(a), 0, dims) + embed(energies(b), 1, dims) +
                      embed(0.5 * omega_s * pauli_z(), 2, dims);
    h_static += kron(n_a3, kron(identity(4), c_med));
    h_static += kron(identity(4), kron(n_b1, c_med));
    h_static = 0.5 * (h_static + h_static.adjoint()).eval();

    const Matrix h_drive = embed(drv.rabi * pauli_x(), 2, dims);

    // dephasing operators: four-dimensional qubit counterparts + mediator tau_z
    const Matrix z4 = qubit_z4 ? *qubit_z4
                               : (Matrix(4, 4) << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, -1)
                                     .finished();
    const Matrix l_a = embed(z4, 0, dims);
    const Matrix l_b = embed(z4, 1, dims);
    const Matrix l_m = embed(pauli_z(), 2, dims);

    // initial state |eg, M_-> of the effective model, mapped to the lab frame
    // at t = 0 and embedded into the 32-dimensional space
    Vector psi8 = Vector::Zero(8);
    psi8(3) = 1.0;
    psi8 = u_s8() * u_d8(std::atan2((a.qz + b.qz) * cpl.DeltaK, drv.rabi),
                         std::atan2((a.qz - b.qz) * cpl.DeltaK, drv.rabi)) *
           u_q8() * psi8;
    Eigen::MatrixXd embed8(32, 8);
    embed8.setZero();
    const int slot[2] = {0, 2};  // |1> = |->_e, |0> = |->_g within eigen4
    for (int ia = 0; ia < 2; ++ia)
        for (int ib = 0; ib < 2; ++ib)
            for (int im = 0; im < 2; ++im)
                embed8((slot[ia] * 4 + slot[ib]) * 2 + im, (ia * 2 + ib) * 2 + im) = 1.0;
    const Vector psi32 = embed8 * psi8;
    const Matrix rho0 = psi32 * psi32.adjoint();

    // leakage projector complement: P spans the eigen4 slots {0,2} x {0,2}
    Eigen::VectorXd p_diag = (embed8 * embed8.transpose()).diagonal();

    const Spectrum s = hermitian_eig(h_static);
    const Matrix w = s.eigenvectors;
    const Matrix g_drive = w.adjoint() * h_drive * w;
    const Matrix g_a = w.adjoint() * l_a * w;
    const Matrix g_b = w.adjoint() * l_b * w;
    const Matrix g_m = w.adjoint() * l_m * w;

    const double spread = s.eigenvalues.maxCoeff() - s.eigenvalues.minCoeff();
    const double f_max = spread + std::abs(drv.omega_d);

    auto run = [&](double phase_step, LeakageResult& res) {
        const double dt_raw = phase_step / f_max;
        const long steps = std::max<long>(64, static_cast<long>(std::ceil(t_max / dt_raw)));
        const double dt = t_max / static_cast<double>(steps);
        const long sample_every = std::max<long>(1, steps / std::max(1, opt.samples));

        Matrix sigma = w.adjoint() * rho0 * w;  // sigma_I(0)

        auto rhs_i = [&](double t, const Matrix& r) {
            const Vector ph = phases(s.eigenvalues, t);
            const double drive = drv.rabi == 0.0 ? 0.0 : std::cos(drv.omega_d * t + drv.phi);
            Matrix out = Matrix::Zero(32, 32);
            if (drive != 0.0) {
                const Matrix gd = dress(g_drive, ph);
                out.noalias() = Complex(0.0, -drive) * (gd * r - r * gd);
            }
            auto add_channel = [&](double rate, const Matrix& gop) {
                if (rate == 0.0) return;
                const Matrix l = dress(gop, ph);
                out.noalias() += (0.5 * rate) * (l * r * l);
                out -= (0.5 * rate) * r;
            };
            add_channel(noise.gamma_a, g_a);
            add_channel(noise.gamma_b, g_b);
            add_channel(noise.gamma_M, g_m);
            return out;
        };

        auto measure = [&](double t, const Matrix& sig) {
            // back to the Schrodinger picture: rho = W e^{-i L t} sigma_I e^{+i L t} W^dag
            const Vector ph = phases(s.eigenvalues, t);
            const Matrix rho_s =
                w * (ph.asDiagonal() * sig * ph.conjugate().asDiagonal()) * w.adjoint();
            double pop_p = 0.0, pop_q = 0.0;
            for (int i = 0; i < 32; ++i) {
                const double d = rho_s(i, i).real();
                (p_diag(i) > 0.5 ? pop_p : pop_q) += d;
            }
            res.max_trace_drift =
                std::max(res.max_trace_drift, std::abs(rho_s.trace().real() - 1.0));
            res.max_completeness_defect =
                std::max(res.max_completeness_defect, std::abs(pop_p + pop_q - 1.0));
            return 1.0 - pop_p;
        };

        res.times.clear();
        res.leakage.clear();
        res.steps = steps;
        res.times.push_back(0.0);
        res.leakage.push_back(measure(0.0, sigma));
        for (long k = 0; k < steps; ++k) {
            const double t = k * dt;
            const Matrix k1 = rhs_i(t, sigma);
            const Matrix k2 = rhs_i(t + 0.5 * dt, sigma + (0.5 * dt) * k1);
            const Matrix k3 = rhs_i(t + 0.5 * dt, sigma + (0.5 * dt) * k2);
            const Matrix k4 = rhs_i(t + dt, sigma + dt * k3);
            sigma += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            if ((k + 1) % sample_every == 0 || k + 1 == steps) {
                res.times.push_back(t + dt);
                res.leakage.push_back(measure(t + dt, sigma));
            }
        }
        res.max_leakage = *std::max_element(res.leakage.begin(), res.leakage.end());
        if (res.max_trace_drift > 1e-6)
            throw InvariantBreachError("leakage_simulation: trace drift " +
                                       std::to_string(res.max_trace_drift));
    };

    LeakageResult res;
    run(opt.phase_step, res);
    if (opt.refine) {
        double step = opt.phase_step;
        for (int k = 0; k < opt.max_refinements; ++k) {
            LeakageResult finer;
            step /= 2.0;
            run(step, finer);
            const double change = std::abs(finer.max_leakage - res.max_leakage);
            res = std::move(finer);
            if (change < opt.refine_tol) return res;
        }
        throw StepNonConvergenceError("leakage_simulation: max leakage did not settle below " +
                                      std::to_string(opt.refine_tol));
    }
    return res;
}

}  // namespace qde
