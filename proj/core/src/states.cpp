#include "unruhdec/states.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace unruhdec {

std::array<double, 4> bell_diagonal_spectrum(const BellDiagonalParams& p) {
  return {(1.0 - p.c1 - p.c2 - p.c3) / 4.0, (1.0 - p.c1 + p.c2 + p.c3) / 4.0,
          (1.0 + p.c1 - p.c2 + p.c3) / 4.0, (1.0 + p.c1 + p.c2 - p.c3) / 4.0};
}

double positivity_residual(const BellDiagonalParams& params) {
  double min_eig = std::numeric_limits<double>::max();
  for (double lambda : bell_diagonal_spectrum(params)) {
    min_eig = std::min(min_eig, lambda);
  }
  return std::max(0.0, -min_eig);
}

UnruhParams UnruhParams::from_temperature(double temperature, double omega) {
  if (!(omega > 0.0)) {
    throw DomainError("mode frequency omega must be positive");
  }
  if (std::isnan(temperature) || temperature < 0.0) {
    throw DomainError("Unruh temperature must be >= 0");
  }
  return UnruhParams{omega, temperature};
}

UnruhParams UnruhParams::from_acceleration(double acceleration, double omega) {
  return from_temperature(acceleration / (2.0 * std::numbers::pi), omega);
}

UnruhParams UnruhParams::from_mixing(double q, double omega) {
  if (std::isnan(q) || q < 0.0 || q > 1.0) {
    throw DomainError("mixing weight q must lie in [0, 1]");
  }
  if (q == 0.0) {
    return from_temperature(0.0, omega);
  }
  if (q == 1.0) {
    return from_temperature(std::numeric_limits<double>::infinity(), omega);
  }
  return from_temperature(-omega / std::log(q), omega);
}

double UnruhParams::mixing() const {
  if (!(omega > 0.0)) {
    throw DomainError("mode frequency omega must be positive");
  }
  if (std::isnan(temperature) || temperature < 0.0) {
    throw DomainError("Unruh temperature must be >= 0");
  }
  if (temperature == 0.0) {
    return 0.0;
  }
  if (std::isinf(temperature)) {
    return 1.0;
  }
  return std::exp(-omega / temperature);
}

double UnruhParams::acceleration() const {
  return 2.0 * std::numbers::pi * temperature;
}

std::string ValidationReport::summary() const {
  if (ok()) {
    return "ok";
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i != 0) {
      out << "; ";
    }
    out << violations[i];
  }
  return out.str();
}

ValidationReport validate(const DensityMatrix& rho) {
  ValidationReport report;

  if (!rho.allFinite()) {
    report.violations.push_back("entries not finite");
    return report;
  }

  report.hermiticity_residual = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (report.hermiticity_residual > kHermitianTolerance) {
    std::ostringstream msg;
    msg << "hermiticity residual " << report.hermiticity_residual << " > "
        << kHermitianTolerance;
    report.violations.push_back(msg.str());
  }

  report.trace_residual = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (report.trace_residual > kTraceTolerance) {
    std::ostringstream msg;
    msg << "trace residual " << report.trace_residual << " > "
        << kTraceTolerance;
    report.violations.push_back(msg.str());
  }

  // eigenvalues of the Hermitian part; for a nearly Hermitian matrix this is
  // the spectrum that the PSD bound refers to
  const Matrix4 herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(herm);
  if (solver.info() != Eigen::Success) {
    report.violations.push_back("eigensolver failed during PSD check");
    return report;
  }
  report.psd_residual = std::max(0.0, -solver.eigenvalues().minCoeff());
  if (report.psd_residual > kPsdTolerance) {
    std::ostringstream msg;
    msg << "negative eigenvalue residual " << report.psd_residual << " > "
        << kPsdTolerance;
    report.violations.push_back(msg.str());
  }

  return report;
}

DensityMatrix bell_diagonal(const BellDiagonalParams& params) {
  const double residual = positivity_residual(params);
  if (residual > kPsdTolerance) {
    std::ostringstream msg;
    msg << "Bell-diagonal parameters violate positivity by " << residual;
    throw InvalidStateError(msg.str());
  }

  Matrix4 rho = 0.25 * Matrix4::Identity();
  const double c[3] = {params.c1, params.c2, params.c3};
  for (int i = 1; i <= 3; ++i) {
    rho += 0.25 * c[i - 1] * kron(pauli(i), pauli(i));
  }
  return rho;
}

DensityMatrix unruh_joint_state(const BellDiagonalParams& params,
                                const UnruhParams& unruh) {
  const double residual = positivity_residual(params);
  if (residual > kPsdTolerance) {
    std::ostringstream msg;
    msg << "Bell-diagonal parameters violate positivity by " << residual;
    throw InvalidStateError(msg.str());
  }

  const double q = unruh.mixing();
  const double cos2 = 1.0 / (1.0 + q);       // 1/(e^{-w/T}+1)
  const double sin2 = q / (1.0 + q);         // 1/(e^{w/T}+1)
  const double cos1 = std::sqrt(cos2);
  const double c1 = params.c1, c2 = params.c2, c3 = params.c3;

  Matrix4 rho = Matrix4::Zero();
  rho(0, 0) = (1.0 + c3) * cos2 / 4.0;
  rho(1, 1) = ((1.0 - c3) + (1.0 + c3) * sin2) / 4.0;
  rho(2, 2) = (1.0 - c3) * cos2 / 4.0;
  rho(3, 3) = ((1.0 + c3) + (1.0 - c3) * sin2) / 4.0;
  rho(0, 3) = rho(3, 0) = (c1 - c2) * cos1 / 4.0;
  rho(1, 2) = rho(2, 1) = (c1 + c2) * cos1 / 4.0;

  const ValidationReport report = validate(rho);
  if (!report.ok()) {
    throw InvalidStateError("unruh_joint_state construction invalid: " +
                            report.summary());
  }
  return rho;
}

}  // namespace unruhdec
