#include "qde/operator_algebra.hpp"

#include <cmath>

namespace qde {

bool is_hermitian(const Matrix& a, double rel_tol) {
    if (a.rows() != a.cols()) return false;
    const double scale = a.cwiseAbs().maxCoeff();
    if (scale == 0.0) return true;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Spectrum hermitian_eig(const Matrix& h) {
    if (!is_hermitian(h))
        throw NotHermitianError("hermitian_eig: matrix fails the Hermiticity check");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eig: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix propagator(const Matrix& h, double t_ns) {
    const Spectrum s = hermitian_eig(h);
    Vector phases(s.eigenvalues.size());
    for (Eigen::Index k = 0; k < phases.size(); ++k)
        phases(k) = std::exp(Complex(0.0, -s.eigenvalues(k) * t_ns));
    return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix embed(const Matrix& op, std::size_t slot, const std::vector<Eigen::Index>& dims) {
    if (slot >= dims.size())
        throw DimMismatchError("embed: slot index out of range");
    if (op.rows() != op.cols() || op.rows() != dims[slot])
        throw DimMismatchError("embed: operator dimension does not match dims[slot]");
    Eigen::Index pre = 1, post = 1;
    for (std::size_t k = 0; k < slot; ++k) pre *= dims[k];
    for (std::size_t k = slot + 1; k < dims.size(); ++k) post *= dims[k];
    return kron(kron(identity(pre), op), identity(post));
}

double phase_optimized_distance(const Matrix& u, const Matrix& v) {
    const Complex overlap = (v.adjoint() * u).trace();
    const double phi = std::arg(overlap);
    return (u - std::exp(Complex(0.0, phi)) * v).norm();
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix pauli_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1;
    return m;
}

Matrix pauli_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1;
    return m;
}

}  // namespace qde
