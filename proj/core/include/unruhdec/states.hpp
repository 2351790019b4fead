#pragma once

#include <array>
#include <string>
#include <vector>

#include "unruhdec/numerics.hpp"

namespace unruhdec {

/// Two-qubit state of the (A, region-I) pair in the product basis
/// |0_A 0_I>, |0_A 1_I>, |1_A 0_I>, |1_A 1_I>, with the A index slow.
using DensityMatrix = Matrix4;

/// Bloch-tensor coefficients of the Bell-diagonal state
/// rho = 1/4 (1 + sum_i c_i sigma_i (x) sigma_i), each c_i in [-1, 1].
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// The four eigenvalues (1 -+ c1 -+ c2 -+ c3)/4 of the Bell-diagonal state,
/// in the fixed combination order used for positivity checks (not sorted).
std::array<double, 4> bell_diagonal_spectrum(const BellDiagonalParams& params);

/// max(0, -min eigenvalue): how far the parameter triple is from describing
/// a positive state. Zero for every physical triple.
double positivity_residual(const BellDiagonalParams& params);

/// Mode frequency and Unruh temperature of the accelerated observer.
/// temperature may be +infinity; that is the exact T -> infinity point, at
/// which the mixing weight q = exp(-omega/T) equals 1.
struct UnruhParams {
  double omega = 1.0;
  double temperature = 0.0;

  static UnruhParams from_temperature(double temperature, double omega = 1.0);

  /// T = a / (2 pi).
  static UnruhParams from_acceleration(double acceleration, double omega = 1.0);

  /// Inverse of mixing(): q = 0 maps to T = 0, q = 1 to T = infinity.
  static UnruhParams from_mixing(double q, double omega = 1.0);

  /// q = exp(-omega/T) in [0, 1]; exactly 0 at T = 0 and 1 at T = infinity.
  double mixing() const;

  /// a = 2 pi T.
  double acceleration() const;
};

struct ValidationReport {
  double hermiticity_residual = 0.0;  // max |rho - rho^dagger|
  double trace_residual = 0.0;        // |Tr rho - 1|
  double psd_residual = 0.0;          // max(0, -lambda_min)
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks Hermiticity, unit trace and positivity; each violated bound is
/// listed with its measured residual. Never throws.
ValidationReport validate(const DensityMatrix& rho);

/// rho = 1/4 (1 + sum_i c_i sigma_i (x) sigma_i). Both marginals are I/2.
DensityMatrix bell_diagonal(const BellDiagonalParams& params);

/// Joint state of inertial A and the Rindler region-I mode after tracing
/// region II, with q = exp(-omega/T):
///
///   diag: (1+c3)/(4(q+1)), [(1-c3)+(1+c3) q/(1+q)]/4,
///         (1-c3)/(4(q+1)), [(1+c3)+(1-c3) q/(1+q)]/4
///   anti-diagonal: (c1-c2)/(4 sqrt(q+1)) on the outer corners,
///                  (c1+c2)/(4 sqrt(q+1)) on the inner entries.
///
/// Reduces to bell_diagonal(params) at T = 0.
DensityMatrix unruh_joint_state(const BellDiagonalParams& params,
                                const UnruhParams& unruh);

}  // namespace unruhdec
