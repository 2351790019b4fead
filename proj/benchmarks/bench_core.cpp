#include <benchmark/benchmark.h>

#include "unruhdec/dynamics.hpp"

namespace bm = benchmark;
using namespace unruhdec;

namespace {

const BellDiagonalParams kParams{1.0, -0.6, 0.6};

DensityMatrix fixture_state(double q, double lambda_t) {
  return evolved_state(kParams, UnruhParams::from_mixing(q),
                       ChannelKind::PhaseFlip, lambda_t);
}

}  // namespace

static void BM_ConditionalEntropy(bm::State& state) {
  const DensityMatrix rho = fixture_state(0.3, 0.2);
  const MeasurementAngles angles{1.1, 2.2};
  for (auto _ : state) {
    bm::DoNotOptimize(conditional_entropy(rho, angles));
  }
}
BENCHMARK(BM_ConditionalEntropy);

static void BM_HermitianEigenvalues(bm::State& state) {
  const DensityMatrix rho = fixture_state(0.3, 0.2);
  for (auto _ : state) {
    bm::DoNotOptimize(hermitian_eigenvalues(rho));
  }
}
BENCHMARK(BM_HermitianEigenvalues);

static void BM_ApplyTwoSided(bm::State& state) {
  const DensityMatrix rho =
      unruh_joint_state(kParams, UnruhParams::from_mixing(0.3));
  const KrausChannel on_a =
      kraus_for(ChannelKind::PhaseFlip, 0.2, Subsystem::A);
  const KrausChannel on_i =
      kraus_for(ChannelKind::PhaseFlip, 0.2, Subsystem::RegionI);
  for (auto _ : state) {
    bm::DoNotOptimize(apply_two_sided(rho, on_a, on_i));
  }
}
BENCHMARK(BM_ApplyTwoSided);

static void BM_Concurrence(bm::State& state) {
  const DensityMatrix rho = fixture_state(0.3, 0.2);
  for (auto _ : state) {
    bm::DoNotOptimize(concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

static void BM_ClassicalCorrelation(bm::State& state) {
  const DensityMatrix rho = fixture_state(0.3, 0.2);
  for (auto _ : state) {
    bm::DoNotOptimize(classical_correlation(rho));
  }
}
BENCHMARK(BM_ClassicalCorrelation)->Unit(bm::kMillisecond);

static void BM_EvaluatePoint(bm::State& state) {
  const UnruhParams unruh = UnruhParams::from_mixing(0.3);
  for (auto _ : state) {
    bm::DoNotOptimize(
        evaluate_point(kParams, unruh, ChannelKind::PhaseFlip, 0.2));
  }
}
BENCHMARK(BM_EvaluatePoint)->Unit(bm::kMillisecond);

static void BM_FindTransition(bm::State& state) {
  const UnruhParams unruh = UnruhParams::from_mixing(1.0);
  for (auto _ : state) {
    bm::DoNotOptimize(
        find_transition(kParams, unruh, ChannelKind::PhaseFlip));
  }
}
BENCHMARK(BM_FindTransition)->Unit(bm::kMillisecond);

BENCHMARK_MAIN();
