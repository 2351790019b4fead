#pragma once

#include <optional>
#include <vector>

#include "unruhdec/channels.hpp"
#include "unruhdec/correlations.hpp"

namespace unruhdec {

struct SweepConfig {
  BellDiagonalParams params;
  UnruhParams unruh;
  ChannelKind channel = ChannelKind::PhaseFlip;
  std::vector<double> t_grid;  // strictly increasing, all >= 0
};

/// Search interval in lambda*t. All fixtures of interest sit inside [0, 2];
/// callers may widen.
struct Bracket {
  double lo = 0.0;
  double hi = 2.0;
};

enum class DetectionMethod { Detected, ClosedForm };

/// Result of a transition or sudden-death search. The time fields are the
/// bisection results; method is ClosedForm when an analytic expression was
/// also applicable, in which case residual = |bisection - closed form|.
struct TransitionReport {
  std::optional<double> transition_time;
  std::optional<double> sudden_death_time;
  DetectionMethod method = DetectionMethod::Detected;
  double residual = 0.0;
};

/// Unruh joint state evolved through the flip channel at dimensionless time
/// lambda_t, p = 1 - exp(-lambda_t) on both sides.
DensityMatrix evolved_state(const BellDiagonalParams& params,
                            const UnruhParams& unruh, ChannelKind channel,
                            double lambda_t);

/// Full correlation record (I, C, D, concurrence, optimal angles) at one
/// grid point.
CorrelationRecord evaluate_point(const BellDiagonalParams& params,
                                 const UnruhParams& unruh, ChannelKind channel,
                                 double lambda_t);

/// One record per grid point, in grid order. A failure at any point aborts
/// the sweep with a SweepError naming the offending lambda_t.
std::vector<CorrelationRecord> sweep(const SweepConfig& config);

/// Locates the time where the minimizing measurement branch switches, by
/// bisecting the crossing of the two candidate conditional entropies that
/// exchange the argmin between the bracket endpoints (candidates: theta = 0,
/// (pi/2, 0) and (pi/2, pi/2)). Resolution 1e-8 in lambda_t. Throws
/// NoBracketError when the argmin branch is the same at both endpoints,
/// which legitimately means "no transition" for some parameter sets.
TransitionReport find_transition(const BellDiagonalParams& params,
                                 const UnruhParams& unruh, ChannelKind channel,
                                 Bracket bracket = {});

/// Locates the entanglement sudden-death time by bisecting concurrence = 0
/// to 1e-8 in lambda_t. Requires positive concurrence at the bracket start
/// and zero at the end (NoBracketError otherwise). For the phase flip with
/// c1 > c3, -c2 > 0 (or the roles of c1 and c2 exchanged) the analytic
/// expression -1/4 ln[(1-c3)(1+2q-c3) / ((c1-c2)^2 (1+q))] is evaluated as a
/// cross-check and its residual reported.
TransitionReport find_sudden_death(const BellDiagonalParams& params,
                                   const UnruhParams& unruh,
                                   ChannelKind channel, Bracket bracket = {});

/// Inertial-frame (T = 0) phase-flip transition time 1/2 ln(|c1|/|c3|).
/// Valid for |c1| >= |c2| and c1, c3 != 0; DomainError otherwise.
double closed_form_transition_phase_flip_T0(const BellDiagonalParams& params);

}  // namespace unruhdec
