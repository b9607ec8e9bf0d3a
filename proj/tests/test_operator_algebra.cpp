#include <doctest.h>

#include "oracles.hpp"
#include "qde/operator_algebra.hpp"

using namespace qde;

TEST_CASE("kron identities") {
    CHECK((kron(identity(2), identity(2)) - identity(4)).norm() == 0.0);

    const Matrix zz = kron(pauli_z(), identity(2));
    CHECK(zz(0, 0).real() == 1.0);
    CHECK(zz(1, 1).real() == 1.0);
    CHECK(zz(2, 2).real() == -1.0);
    CHECK(zz(3, 3).real() == -1.0);

    // kron(sx, sx)|00> = |11> with |0> = (1,0) per factor
    Vector v00 = Vector::Zero(4);
    v00(0) = 1.0;
    Vector v = kron(pauli_x(), pauli_x()) * v00;
    CHECK(std::abs(v(3) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(v.head(3).norm() == 0.0);

    // associativity: exact for exactly-representable entries, one rounding
    // step otherwise (the two orders associate the scalar products differently)
    CHECK((kron(kron(pauli_x(), pauli_y()), pauli_z()) -
           kron(pauli_x(), kron(pauli_y(), pauli_z())))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    const Matrix a = oracles::random_hermitian(2, 11);
    const Matrix b = oracles::random_hermitian(3, 12);
    const Matrix c = oracles::random_hermitian(2, 13);
    CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("hermitian_eig basics") {
    auto s = hermitian_eig(pauli_z());
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));

    s = hermitian_eig(pauli_x());
    CHECK(s.eigenvalues(0) == doctest::Approx(-1.0));
    CHECK(s.eigenvalues(1) == doctest::Approx(1.0));
    // eigenvectors (|0> -+ |1>)/sqrt(2) up to phase
    for (int k = 0; k < 2; ++k)
        CHECK(std::abs(std::abs(s.eigenvectors(0, k)) - 1.0 / std::sqrt(2.0)) < 1e-12);

    Matrix bad = pauli_plus();
    CHECK_THROWS_AS(hermitian_eig(bad), NotHermitianError);
}

TEST_CASE("hermitian_eig H_sym closed form at Delta = t_c = 1") {
    // blocks {e0,s+} and {g0,s-}: E = 1/2 +- sqrt(1+2)/2 and 1/2 +- sqrt(1+6)/2
    Matrix h = Matrix::Zero(4, 4);
    h(0, 1) = h(1, 0) = -1.0 / std::sqrt(2.0);
    h(1, 1) = 1.0;
    h(2, 3) = h(3, 2) = -std::sqrt(1.5);
    h(3, 3) = 1.0;
    const auto s = hermitian_eig(h);
    const double r3 = std::sqrt(3.0), r7 = std::sqrt(7.0);
    CHECK(s.eigenvalues(0) == doctest::Approx((1.0 - r7) / 2.0).epsilon(1e-12));
    CHECK(s.eigenvalues(1) == doctest::Approx((1.0 - r3) / 2.0).epsilon(1e-12));
    CHECK(s.eigenvalues(2) == doctest::Approx((1.0 + r3) / 2.0).epsilon(1e-12));
    CHECK(s.eigenvalues(3) == doctest::Approx((1.0 + r7) / 2.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig reconstruction and orthonormality") {
    const Matrix h = oracles::random_hermitian(8, 21, 3.0);
    const auto s = hermitian_eig(h);
    const Matrix v = s.eigenvectors;
    CHECK((v.adjoint() * v - identity(8)).cwiseAbs().maxCoeff() < 1e-12);
    const Matrix rec = v * s.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() * v.adjoint();
    CHECK((rec - h).norm() < 1e-10 * h.norm());
    for (Eigen::Index k = 1; k < 8; ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k - 1));
}

TEST_CASE("propagator") {
    CHECK((propagator(Matrix::Zero(3, 3), 2.5) - identity(3)).norm() < 1e-14);

    const Matrix u = propagator(units::pi / 2.0 * pauli_z(), 1.0);
    CHECK(std::abs(u(0, 0) - std::exp(Complex(0, -units::pi / 2.0))) < 1e-14);
    CHECK(std::abs(u(1, 1) - std::exp(Complex(0, units::pi / 2.0))) < 1e-14);

    // unitary to 1e-10 and matches an independent ODE oracle
    const Matrix h = oracles::random_hermitian(8, 33, 2.0);
    const Matrix up = propagator(h, 1.7);
    CHECK((up.adjoint() * up - identity(8)).cwiseAbs().maxCoeff() < 1e-10);
    const Matrix uo = oracles::schrodinger_propagator(h, 1.7, 20000);
    CHECK((up - uo).norm() < 1e-8);
}

TEST_CASE("embed") {
    const std::vector<Eigen::Index> dims{2, 2, 2};
    CHECK((embed(pauli_z(), 0, dims) - kron(pauli_z(), identity(4))).norm() == 0.0);

    // tau_x on the last slot flips |S11> -> |S12> leaving the qubits alone
    Vector v = Vector::Zero(8);
    v(1) = 1.0;  // |0,0> x |S11> with ordering {|S12>,|S11>}
    const Vector w = embed(pauli_x(), 2, dims) * v;
    CHECK(std::abs(w(0) - Complex(1, 0)) < 1e-15);

    // trace identity
    const Matrix a = oracles::random_hermitian(3, 44);
    const std::vector<Eigen::Index> d2{2, 3, 4};
    const Complex tr = embed(a, 1, d2).trace();
    CHECK(std::abs(tr - a.trace() * 8.0) < 1e-12);

    CHECK_THROWS_AS(embed(pauli_z(), 1, d2), DimMismatchError);
}

TEST_CASE("phase_optimized_distance") {
    const Matrix u = propagator(oracles::random_hermitian(4, 55), 0.3);
    CHECK(phase_optimized_distance(u, std::exp(Complex(0, 1.234)) * u) < 1e-13);
    CHECK(phase_optimized_distance(u, u) < 1e-13);
}
