#pragma once

#include <string_view>
#include <vector>

#include "unruhdec/states.hpp"

namespace unruhdec {

enum class ChannelKind { PhaseFlip, BitFlip, PhaseBitFlip };

std::string_view to_string(ChannelKind kind);

/// Accepts "phase", "bit", "phase-bit"; throws ParseError otherwise.
ChannelKind parse_channel(std::string_view token);

enum class Subsystem { A, RegionI };

/// Single-qubit Kraus operators acting on one side of the joint state.
/// Trace preservation: sum_k K_k^dagger K_k = I within 1e-12.
struct KrausChannel {
  std::vector<Matrix2> operators;
  Subsystem subsystem = Subsystem::A;
};

/// max entrywise |sum_k K_k^dagger K_k - I|.
double completeness_residual(const KrausChannel& channel);

/// Kraus pair for a flip channel of strength p in [0, 1]:
/// { sqrt(1 - p/2) I, sqrt(p/2) sigma }, with sigma = sigma_3 (phase flip),
/// sigma_1 (bit flip) or sigma_2 (phase-bit flip).
KrausChannel kraus_for(ChannelKind kind, double p, Subsystem subsystem);

/// Channel strength as a function of the dimensionless time lambda*t:
/// p = 1 - exp(-lambda_t). DomainError on negative input.
double p_of_t(double lambda_t);

/// Two-sided operator-sum application
///   sum_ij (K_i (x) I)(I (x) L_j) rho (I (x) L_j)^dagger (K_i (x) I)^dagger,
/// with on_a acting on subsystem A and on_i on region I. Preserves trace and
/// Hermiticity; the result is validated before being returned.
DensityMatrix apply_two_sided(const DensityMatrix& rho,
                              const KrausChannel& on_a,
                              const KrausChannel& on_i);

/// Closed form of the phase-flip evolution of the joint state:
///   1/4 (1 + c0' I (x) sigma_3 + sum_i c_i' sigma_i (x) sigma_i)
/// with c0' = -q/(1+q), c1' = c1 e^{-2 lambda t}/sqrt(1+q),
/// c2' = c2 e^{-2 lambda t}/sqrt(1+q), c3' = c3/(1+q).
/// Kept as an analytic cross-check for apply_two_sided.
DensityMatrix evolved_phase_flip_analytic(const BellDiagonalParams& params,
                                          const UnruhParams& unruh,
                                          double lambda_t);

/// Closed-form spectrum of the phase-flip evolved state, descending:
///   (2 -+ c3 -+ c3 (1-q)/(1+q) -+ 2 sqrt((c1 +- c2)^2 e^{-4 lambda t}/(1+q)
///      + q^2/(1+q)^2)) / 8.
Spectrum analytic_eigenvalues_phase_flip(const BellDiagonalParams& params,
                                         const UnruhParams& unruh,
                                         double lambda_t);

}  // namespace unruhdec
