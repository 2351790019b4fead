#include "unruhdec/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace unruhdec {

namespace {

constexpr double kTimeResolution = 1e-8;
constexpr double kPi = std::numbers::pi;

// candidate measurement branches whose crossing defines the transition:
// theta = 0, (pi/2, 0) and (pi/2, pi/2)
constexpr std::array<MeasurementAngles, 3> kBranches = {
    MeasurementAngles{0.0, 0.0}, MeasurementAngles{kPi / 2.0, 0.0},
    MeasurementAngles{kPi / 2.0, kPi / 2.0}};

std::array<double, 3> branch_entropies(const BellDiagonalParams& params,
                                       const UnruhParams& unruh,
                                       ChannelKind channel, double lambda_t) {
  const DensityMatrix rho = evolved_state(params, unruh, channel, lambda_t);
  std::array<double, 3> s;
  for (std::size_t i = 0; i < kBranches.size(); ++i) {
    s[i] = conditional_entropy(rho, kBranches[i]);
  }
  return s;
}

std::size_t argmin(const std::array<double, 3>& values) {
  return static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
}

void require_bracket(const Bracket& bracket) {
  if (std::isnan(bracket.lo) || std::isnan(bracket.hi) || bracket.lo < 0.0 ||
      bracket.hi <= bracket.lo) {
    throw DomainError("bracket must satisfy 0 <= lo < hi");
  }
}

}  // namespace

DensityMatrix evolved_state(const BellDiagonalParams& params,
                            const UnruhParams& unruh, ChannelKind channel,
                            double lambda_t) {
  const DensityMatrix joint = unruh_joint_state(params, unruh);
  const double p = p_of_t(lambda_t);
  return apply_two_sided(joint, kraus_for(channel, p, Subsystem::A),
                         kraus_for(channel, p, Subsystem::RegionI));
}

CorrelationRecord evaluate_point(const BellDiagonalParams& params,
                                 const UnruhParams& unruh, ChannelKind channel,
                                 double lambda_t) {
  const DensityMatrix rho = evolved_state(params, unruh, channel, lambda_t);

  CorrelationRecord record;
  record.lambda_t = lambda_t;
  record.mutual_info = mutual_information(rho);
  const ClassicalCorrelation classical = classical_correlation(rho);
  record.classical = classical.value;
  record.discord = record.mutual_info - classical.value;
  record.concurrence = concurrence(rho);
  record.optimal_angles = classical.angles;
  return record;
}

std::vector<CorrelationRecord> sweep(const SweepConfig& config) {
  if (config.t_grid.empty()) {
    throw DomainError("t_grid must be non-empty");
  }
  for (std::size_t i = 0; i < config.t_grid.size(); ++i) {
    const double t = config.t_grid[i];
    if (std::isnan(t) || std::isinf(t) || t < 0.0) {
      throw DomainError("t_grid values must be finite and >= 0");
    }
    if (i > 0 && t <= config.t_grid[i - 1]) {
      throw DomainError("t_grid must be strictly increasing");
    }
  }

  std::vector<CorrelationRecord> records;
  records.reserve(config.t_grid.size());
  for (double t : config.t_grid) {
    try {
      records.push_back(
          evaluate_point(config.params, config.unruh, config.channel, t));
    } catch (const std::exception& e) {
      throw SweepError(t, e.what());
    }
  }
  return records;
}

TransitionReport find_transition(const BellDiagonalParams& params,
                                 const UnruhParams& unruh, ChannelKind channel,
                                 Bracket bracket) {
  require_bracket(bracket);

  const std::size_t branch_lo =
      argmin(branch_entropies(params, unruh, channel, bracket.lo));
  const std::size_t branch_hi =
      argmin(branch_entropies(params, unruh, channel, bracket.hi));
  if (branch_lo == branch_hi) {
    throw NoBracketError("no transition in bracket");
  }

  // g < 0 while branch_lo is still the minimizer, g > 0 once branch_hi is
  const auto g = [&](double t) {
    const auto s = branch_entropies(params, unruh, channel, t);
    return s[branch_lo] - s[branch_hi];
  };

  double lo = bracket.lo;
  double hi = bracket.hi;
  while (hi - lo > kTimeResolution) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double detected = 0.5 * (lo + hi);

  TransitionReport report;
  report.transition_time = detected;

  const double q = unruh.mixing();
  if (channel == ChannelKind::PhaseFlip && q == 0.0 &&
      std::abs(params.c1) >= std::abs(params.c2) && params.c1 != 0.0 &&
      params.c3 != 0.0) {
    const double closed = closed_form_transition_phase_flip_T0(params);
    report.method = DetectionMethod::ClosedForm;
    report.residual = std::abs(detected - closed);
  } else if (channel == ChannelKind::PhaseBitFlip && params.c1 != 0.0 &&
             params.c2 != 0.0 &&
             std::abs(params.c1) >= std::abs(params.c2)) {
    const double closed =
        -0.25 * std::log((params.c2 * params.c2) / (params.c1 * params.c1));
    report.method = DetectionMethod::ClosedForm;
    report.residual = std::abs(detected - closed);
  }
  return report;
}

TransitionReport find_sudden_death(const BellDiagonalParams& params,
                                   const UnruhParams& unruh,
                                   ChannelKind channel, Bracket bracket) {
  require_bracket(bracket);

  const auto concurrence_at = [&](double t) {
    return concurrence(evolved_state(params, unruh, channel, t));
  };

  if (concurrence_at(bracket.lo) <= 0.0) {
    throw NoBracketError("concurrence already zero at bracket start");
  }
  if (concurrence_at(bracket.hi) > 0.0) {
    throw NoBracketError("concurrence positive throughout bracket");
  }

  double lo = bracket.lo;
  double hi = bracket.hi;
  while (hi - lo > kTimeResolution) {
    const double mid = 0.5 * (lo + hi);
    (concurrence_at(mid) > 0.0 ? lo : hi) = mid;
  }
  const double detected = 0.5 * (lo + hi);

  TransitionReport report;
  report.sudden_death_time = detected;

  const bool validity =
      (params.c1 > params.c3 && -params.c2 > 0.0) ||
      (params.c2 > params.c3 && -params.c1 > 0.0);
  if (channel == ChannelKind::PhaseFlip && validity && params.c3 < 1.0) {
    const double q = unruh.mixing();
    const double diff = params.c1 - params.c2;
    const double arg = (1.0 - params.c3) * (1.0 + 2.0 * q - params.c3) /
                       (diff * diff * (1.0 + q));
    if (arg > 0.0 && arg <= 1.0) {
      const double closed = -0.25 * std::log(arg);
      report.method = DetectionMethod::ClosedForm;
      report.residual = std::abs(detected - closed);
    }
  }
  return report;
}

double closed_form_transition_phase_flip_T0(const BellDiagonalParams& params) {
  if (std::abs(params.c1) < std::abs(params.c2)) {
    throw DomainError(
        "closed form requires |c1| >= |c2| (sigma_1 the slow coefficient)");
  }
  if (params.c1 == 0.0 || params.c3 == 0.0) {
    throw DomainError("closed form requires c1 != 0 and c3 != 0");
  }
  return 0.5 * std::log(std::abs(params.c1) / std::abs(params.c3));
}

}  // namespace unruhdec
