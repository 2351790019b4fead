#include "unruhdec/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace unruhdec {

namespace {

constexpr double kReconstructionTolerance = 1e-10;
constexpr double kImaginaryTolerance = 1e-9;

void require_finite(const Eigen::MatrixXcd& m) {
  if (!m.allFinite()) {
    throw DomainError("matrix entries must be finite");
  }
  if (m.rows() != m.cols()) {
    throw DomainError("matrix must be square");
  }
}

}  // namespace

Spectrum hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  require_finite(m);

  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |m - m^dagger| = " << herm;
    throw NotHermitianError(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NoConvergenceError("self-adjoint eigensolver did not converge");
  }

  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const double residual =
      (m - v * solver.eigenvalues().asDiagonal() * v.adjoint())
          .cwiseAbs()
          .maxCoeff();
  if (residual > kReconstructionTolerance) {
    std::ostringstream msg;
    msg << "eigendecomposition residual " << residual << " exceeds "
        << kReconstructionTolerance;
    throw NoConvergenceError(msg.str());
  }

  Spectrum values(solver.eigenvalues().data(),
                  solver.eigenvalues().data() + m.rows());
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

Spectrum general_eigenvalues(const Eigen::MatrixXcd& m) {
  require_finite(m);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) {
    throw NoConvergenceError("complex eigensolver did not converge");
  }

  const double imag = solver.eigenvalues().imag().cwiseAbs().maxCoeff();
  if (imag > kImaginaryTolerance) {
    std::ostringstream msg;
    msg << "spectrum expected real, max |Im lambda| = " << imag;
    throw ComplexSpectrumError(msg.str());
  }

  Spectrum values(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    values[i] = solver.eigenvalues()[i].real();
  }
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

std::array<double, 2> hermitian_eigenvalues_2x2(const Matrix2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return {mean + radius, mean - radius};
}

double shannon_term(double x) {
  if (std::isnan(x) || x > 1.0 + 1e-9 || x < -kPsdTolerance) {
    std::ostringstream msg;
    msg << "shannon_term argument " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  if (x <= 0.0 || x >= 1.0) {
    return 0.0;
  }
  return -x * std::log2(x);
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  double s = 0.0;
  for (double lambda : hermitian_eigenvalues(rho)) {
    s += shannon_term(lambda);
  }
  return s;
}

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

Matrix2 partial_trace_first(const Matrix4& m) {
  Matrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out(i, j) = m(i, j) + m(2 + i, 2 + j);
    }
  }
  return out;
}

Matrix2 partial_trace_second(const Matrix4& m) {
  Matrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out(a, b) = m(2 * a, 2 * b) + m(2 * a + 1, 2 * b + 1);
    }
  }
  return out;
}

const Matrix2& identity2() {
  static const Matrix2 m = Matrix2::Identity();
  return m;
}

const Matrix2& pauli_x() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}

const Matrix2& pauli_y() {
  static const Matrix2 m =
      (Matrix2() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}

const Matrix2& pauli_z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}

const Matrix2& pauli(int i) {
  switch (i) {
    case 1:
      return pauli_x();
    case 2:
      return pauli_y();
    case 3:
      return pauli_z();
    default:
      throw DomainError("pauli index must be 1, 2 or 3");
  }
}

}  // namespace unruhdec
