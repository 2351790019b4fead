#include "unruhdec/channels.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace unruhdec {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::PhaseFlip:
      return "phase";
    case ChannelKind::BitFlip:
      return "bit";
    case ChannelKind::PhaseBitFlip:
      return "phase-bit";
  }
  throw DomainError("unknown channel kind");
}

ChannelKind parse_channel(std::string_view token) {
  if (token == "phase") {
    return ChannelKind::PhaseFlip;
  }
  if (token == "bit") {
    return ChannelKind::BitFlip;
  }
  if (token == "phase-bit") {
    return ChannelKind::PhaseBitFlip;
  }
  throw ParseError("unknown channel '" + std::string(token) +
                   "' (expected phase, bit or phase-bit)");
}

double completeness_residual(const KrausChannel& channel) {
  Matrix2 sum = Matrix2::Zero();
  for (const Matrix2& k : channel.operators) {
    sum += k.adjoint() * k;
  }
  return (sum - Matrix2::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel kraus_for(ChannelKind kind, double p, Subsystem subsystem) {
  if (std::isnan(p) || p < 0.0 || p > 1.0) {
    std::ostringstream msg;
    msg << "channel strength p = " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }

  const Matrix2* sigma = nullptr;
  switch (kind) {
    case ChannelKind::PhaseFlip:
      sigma = &pauli_z();
      break;
    case ChannelKind::BitFlip:
      sigma = &pauli_x();
      break;
    case ChannelKind::PhaseBitFlip:
      sigma = &pauli_y();
      break;
  }

  KrausChannel channel;
  channel.subsystem = subsystem;
  channel.operators = {std::sqrt(1.0 - p / 2.0) * identity2(),
                       std::sqrt(p / 2.0) * (*sigma)};
  return channel;
}

double p_of_t(double lambda_t) {
  if (std::isnan(lambda_t) || lambda_t < 0.0) {
    throw DomainError("lambda_t must be >= 0");
  }
  return 1.0 - std::exp(-lambda_t);
}

DensityMatrix apply_two_sided(const DensityMatrix& rho,
                              const KrausChannel& on_a,
                              const KrausChannel& on_i) {
  if (on_a.subsystem != Subsystem::A || on_i.subsystem != Subsystem::RegionI) {
    throw DomainError(
        "apply_two_sided expects one channel on A and one on region I");
  }
  for (const KrausChannel* ch : {&on_a, &on_i}) {
    const double residual = completeness_residual(*ch);
    if (residual > kHermitianTolerance) {
      std::ostringstream msg;
      msg << "Kraus completeness residual " << residual << " > "
          << kHermitianTolerance;
      throw DomainError(msg.str());
    }
  }

  Matrix4 out = Matrix4::Zero();
  for (const Matrix2& ka : on_a.operators) {
    for (const Matrix2& ki : on_i.operators) {
      const Matrix4 op = kron(ka, ki);
      out += op * rho * op.adjoint();
    }
  }

  const ValidationReport report = validate(out);
  if (!report.ok()) {
    throw InvalidStateError("channel output invalid: " + report.summary());
  }
  return out;
}

DensityMatrix evolved_phase_flip_analytic(const BellDiagonalParams& params,
                                          const UnruhParams& unruh,
                                          double lambda_t) {
  if (std::isnan(lambda_t) || lambda_t < 0.0) {
    throw DomainError("lambda_t must be >= 0");
  }
  const double q = unruh.mixing();
  const double decay = std::exp(-2.0 * lambda_t);
  const double c0 = -q / (1.0 + q);
  const double c1 = params.c1 * decay / std::sqrt(1.0 + q);
  const double c2 = params.c2 * decay / std::sqrt(1.0 + q);
  const double c3 = params.c3 / (1.0 + q);

  Matrix4 rho = 0.25 * Matrix4::Identity();
  rho += 0.25 * c0 * kron(identity2(), pauli_z());
  rho += 0.25 * c1 * kron(pauli_x(), pauli_x());
  rho += 0.25 * c2 * kron(pauli_y(), pauli_y());
  rho += 0.25 * c3 * kron(pauli_z(), pauli_z());

  const ValidationReport report = validate(rho);
  if (!report.ok()) {
    throw InvalidStateError("analytic phase-flip state invalid: " +
                            report.summary());
  }
  return rho;
}

Spectrum analytic_eigenvalues_phase_flip(const BellDiagonalParams& params,
                                         const UnruhParams& unruh,
                                         double lambda_t) {
  if (std::isnan(lambda_t) || lambda_t < 0.0) {
    throw DomainError("lambda_t must be >= 0");
  }
  const double q = unruh.mixing();
  const double c1 = params.c1, c2 = params.c2, c3 = params.c3;
  const double decay4 = std::exp(-4.0 * lambda_t);
  const double tilt = c3 * (1.0 - q) / (1.0 + q);
  const double s_plus = std::sqrt((c1 + c2) * (c1 + c2) * decay4 / (1.0 + q) +
                                  q * q / ((1.0 + q) * (1.0 + q)));
  const double s_minus = std::sqrt((c1 - c2) * (c1 - c2) * decay4 / (1.0 + q) +
                                   q * q / ((1.0 + q) * (1.0 + q)));

  Spectrum values = {(2.0 - c3 - tilt - 2.0 * s_plus) / 8.0,
                     (2.0 - c3 - tilt + 2.0 * s_plus) / 8.0,
                     (2.0 + c3 + tilt - 2.0 * s_minus) / 8.0,
                     (2.0 + c3 + tilt + 2.0 * s_minus) / 8.0};
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

}  // namespace unruhdec
