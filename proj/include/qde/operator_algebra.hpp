#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "qde/errors.hpp"

namespace qde {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Eigendecomposition of a Hermitian matrix: ascending real eigenvalues,
// orthonormal eigenvector columns.
struct Spectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;
};

// max|A - A^dag| <= rel_tol * max|A| (zero matrix counts as Hermitian)
bool is_hermitian(const Matrix& a, double rel_tol = 1e-12);

Matrix kron(const Matrix& a, const Matrix& b);

// Throws NotHermitianError if the symmetry check fails.
Spectrum hermitian_eig(const Matrix& h);

// U = exp(-i h t), h Hermitian in rad/ns, t in ns. Unitary by construction
// (computed from the eigendecomposition, not a series).
Matrix propagator(const Matrix& h, double t_ns);

// Places op on subsystem `slot` of a tensor-product space with the given
// subsystem dimensions; identity everywhere else.
Matrix embed(const Matrix& op, std::size_t slot, const std::vector<Eigen::Index>& dims);

// min over phi of ||u - e^{i phi} v||_F
double phase_optimized_distance(const Matrix& u, const Matrix& v);

Matrix identity(Eigen::Index n);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix pauli_plus();   // |1><0| in the {|1>,|0>} ordering used throughout
Matrix pauli_minus();

}  // namespace qde
