#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "unruhdec/common.hpp"

namespace unruhdec {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

/// Real eigenvalues sorted in descending order.
using Spectrum = std::vector<double>;

/// Eigenvalues of a Hermitian matrix, descending.
///
/// Requires max entrywise |m - m^dagger| <= 1e-12 (NotHermitianError
/// otherwise) and finite entries. The decomposition is accepted only if the
/// reconstruction residual ||m - V L V^dagger||_max stays below 1e-10;
/// a failed iteration or a residual above that bound raises
/// NoConvergenceError instead of silently returning garbage.
Spectrum hermitian_eigenvalues(const Eigen::MatrixXcd& m);

/// Real parts of the eigenvalues of a general matrix, descending.
///
/// Intended for products rho * rho_tilde whose spectrum is real and
/// nonnegative in exact arithmetic; raises ComplexSpectrumError if any
/// imaginary part exceeds 1e-9.
Spectrum general_eigenvalues(const Eigen::MatrixXcd& m);

/// Closed-form eigenvalues {hi, lo} of a Hermitian 2x2 matrix.
/// Fast path for conditioned single-qubit states; the caller guarantees
/// Hermiticity.
std::array<double, 2> hermitian_eigenvalues_2x2(const Matrix2& m);

/// -x log2(x) with the 0 log 0 = 0 convention. Accepts x in
/// [-kPsdTolerance, 1 + 1e-9]; small negatives clamp to 0, values just above
/// 1 clamp to 1, anything further out raises DomainError.
double shannon_term(double x);

/// Von Neumann entropy in bits: sum of shannon_term over the spectrum.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// Tensor product of two single-qubit operators, first factor on the slow
/// index.
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Trace over the slow (first) qubit of a two-qubit operator.
Matrix2 partial_trace_first(const Matrix4& m);

/// Trace over the fast (second) qubit of a two-qubit operator.
Matrix2 partial_trace_second(const Matrix4& m);

const Matrix2& identity2();
const Matrix2& pauli_x();
const Matrix2& pauli_y();
const Matrix2& pauli_z();

/// pauli(1) = sigma_x, pauli(2) = sigma_y, pauli(3) = sigma_z.
const Matrix2& pauli(int i);

}  // namespace unruhdec
