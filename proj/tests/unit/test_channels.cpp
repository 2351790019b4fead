#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "unruhdec/channels.hpp"

using namespace unruhdec;
using unruhdec::testing::random_bell_params;

namespace {

DensityMatrix phase_flip_evolve(const DensityMatrix& rho, double lambda_t) {
  const double p = p_of_t(lambda_t);
  return apply_two_sided(rho,
                         kraus_for(ChannelKind::PhaseFlip, p, Subsystem::A),
                         kraus_for(ChannelKind::PhaseFlip, p,
                                   Subsystem::RegionI));
}

}  // namespace

TEST_CASE("kraus_for endpoints") {
  const KrausChannel identity =
      kraus_for(ChannelKind::PhaseFlip, 0.0, Subsystem::A);
  CHECK((identity.operators[0] - Matrix2::Identity()).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK(identity.operators[1].cwiseAbs().maxCoeff() < 1e-15);

  // full dephasing: {I/sqrt(2), sigma_3/sqrt(2)}
  const KrausChannel dephase =
      kraus_for(ChannelKind::PhaseFlip, 1.0, Subsystem::A);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(dephase.operators[0](0, 0).real() ==
        doctest::Approx(inv_sqrt2).epsilon(1e-15));
  CHECK(dephase.operators[1](0, 0).real() ==
        doctest::Approx(inv_sqrt2).epsilon(1e-15));
  CHECK(dephase.operators[1](1, 1).real() ==
        doctest::Approx(-inv_sqrt2).epsilon(1e-15));

  CHECK(completeness_residual(
            kraus_for(ChannelKind::BitFlip, 0.5, Subsystem::A)) < 1e-15);
}

TEST_CASE("kraus completeness across the strength range") {
  for (ChannelKind kind : {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                           ChannelKind::PhaseBitFlip}) {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      CHECK(completeness_residual(kraus_for(kind, p, Subsystem::A)) < 1e-12);
    }
  }
}

TEST_CASE("kraus_for domain") {
  CHECK_THROWS_AS(kraus_for(ChannelKind::PhaseFlip, -0.1, Subsystem::A),
                  DomainError);
  CHECK_THROWS_AS(kraus_for(ChannelKind::PhaseFlip, 1.1, Subsystem::A),
                  DomainError);
  CHECK_THROWS_AS(kraus_for(ChannelKind::BitFlip,
                            std::numeric_limits<double>::quiet_NaN(),
                            Subsystem::A),
                  DomainError);
}

TEST_CASE("p_of_t") {
  CHECK(p_of_t(0.0) == 0.0);
  CHECK(std::abs(p_of_t(50.0) - 1.0) < 1e-15);
  CHECK(p_of_t(0.25541) ==
        doctest::Approx(0.225401152680252).epsilon(1e-12));
  CHECK_THROWS_AS(p_of_t(-1e-9), DomainError);
}

TEST_CASE("apply_two_sided with identity channels is the identity") {
  const DensityMatrix rho =
      unruh_joint_state({1.0, -0.6, 0.6}, UnruhParams::from_mixing(0.3));
  const DensityMatrix out = phase_flip_evolve(rho, 0.0);
  CHECK((out - rho).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("apply_two_sided validates its inputs") {
  const DensityMatrix rho = bell_diagonal({0.0, 0.0, 0.0});
  KrausChannel broken = kraus_for(ChannelKind::PhaseFlip, 0.5, Subsystem::A);
  broken.operators[0] *= 0.9;
  CHECK_THROWS_AS(
      apply_two_sided(rho, broken,
                      kraus_for(ChannelKind::PhaseFlip, 0.5,
                                Subsystem::RegionI)),
      DomainError);

  // both channels on the same side
  CHECK_THROWS_AS(
      apply_two_sided(rho, kraus_for(ChannelKind::PhaseFlip, 0.5, Subsystem::A),
                      kraus_for(ChannelKind::PhaseFlip, 0.5, Subsystem::A)),
      DomainError);
}

TEST_CASE("numeric phase flip matches the analytic closed form") {
  for (const BellDiagonalParams& params :
       {BellDiagonalParams{1.0, -0.6, 0.6},
        BellDiagonalParams{0.8, -0.2, 0.4}}) {
    for (double q : {0.0, 0.5, 1.0}) {
      const UnruhParams unruh = UnruhParams::from_mixing(q);
      for (double lambda_t : {0.0, 0.3, 1.0}) {
        const DensityMatrix numeric =
            phase_flip_evolve(unruh_joint_state(params, unruh), lambda_t);
        const DensityMatrix analytic =
            evolved_phase_flip_analytic(params, unruh, lambda_t);
        CHECK((numeric - analytic).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("analytic evolution endpoints") {
  const BellDiagonalParams params{1.0, -0.6, 0.6};
  const UnruhParams t0 = UnruhParams::from_temperature(0.0);
  CHECK((evolved_phase_flip_analytic(params, t0, 0.0) - bell_diagonal(params))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  const UnruhParams warm = UnruhParams::from_mixing(0.4);
  CHECK((evolved_phase_flip_analytic(params, warm, 0.0) -
         unruh_joint_state(params, warm))
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // at the inertial transition time the sigma_1 coefficient has decayed to
  // c3: 4 * rho_03 + 4 * rho_12 = c1' - c2' + c1' + c2' = 2 c1'
  const double t_transition = 0.5 * std::log(1.0 / 0.6);
  const DensityMatrix at_transition =
      evolved_phase_flip_analytic(params, t0, t_transition);
  const double c1_evolved =
      2.0 * (at_transition(0, 3).real() + at_transition(1, 2).real());
  CHECK(c1_evolved == doctest::Approx(0.6).epsilon(1e-12));
}

TEST_CASE("full dephasing kills the transverse coefficients") {
  const DensityMatrix rho = bell_diagonal({1.0, -0.6, 0.6});
  const KrausChannel a = kraus_for(ChannelKind::PhaseFlip, 1.0, Subsystem::A);
  const KrausChannel i =
      kraus_for(ChannelKind::PhaseFlip, 1.0, Subsystem::RegionI);
  const DensityMatrix out = apply_two_sided(rho, a, i);
  CHECK(std::abs(out(0, 3)) < 1e-15);  // c1' - c2' = 0
  CHECK(std::abs(out(1, 2)) < 1e-15);  // c1' + c2' = 0
  CHECK(out(0, 0).real() == doctest::Approx(0.4).epsilon(1e-14));  // (1+c3)/4
  CHECK(out(1, 1).real() == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("two-sided application preserves trace and Hermiticity") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> qdist(0.0, 1.0);
  std::uniform_real_distribution<double> tdist(0.0, 2.0);
  const ChannelKind kinds[] = {ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                               ChannelKind::PhaseBitFlip};
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = unruh_joint_state(
        random_bell_params(rng), UnruhParams::from_mixing(qdist(rng)));
    const ChannelKind kind = kinds[trial % 3];
    const double p = p_of_t(tdist(rng));
    const DensityMatrix out =
        apply_two_sided(rho, kraus_for(kind, p, Subsystem::A),
                        kraus_for(kind, p, Subsystem::RegionI));
    CHECK(std::abs(out.trace().real() - 1.0) < 1e-12);
    CHECK((out - out.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("phase flip composes as a semigroup in lambda_t") {
  const BellDiagonalParams params{1.0, -0.6, 0.6};
  for (double q : {0.0, 0.5}) {
    const UnruhParams unruh = UnruhParams::from_mixing(q);
    for (double t1 : {0.1, 0.4}) {
      for (double t2 : {0.2, 0.7}) {
        const DensityMatrix stepped = phase_flip_evolve(
            phase_flip_evolve(unruh_joint_state(params, unruh), t1), t2);
        const DensityMatrix direct =
            evolved_phase_flip_analytic(params, unruh, t1 + t2);
        CHECK((stepped - direct).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
  }
}

TEST_CASE("analytic eigenvalues agree with the eigensolver") {
  const UnruhParams t0 = UnruhParams::from_temperature(0.0);
  const BellDiagonalParams params{1.0, -0.6, 0.6};

  const Spectrum initial = analytic_eigenvalues_phase_flip(params, t0, 0.0);
  CHECK(initial[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(initial[1] == doctest::Approx(0.2).epsilon(1e-12));

  // the square-root terms vanish at late times: (1 +- c3)/4 twice each
  const Spectrum late = analytic_eigenvalues_phase_flip(params, t0, 50.0);
  CHECK(late[0] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(late[1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(late[2] == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(late[3] == doctest::Approx(0.1).epsilon(1e-12));

  std::mt19937 rng(43);
  std::uniform_real_distribution<double> qdist(0.0, 1.0);
  std::uniform_real_distribution<double> tdist(0.0, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    const BellDiagonalParams p = random_bell_params(rng);
    const UnruhParams unruh = UnruhParams::from_mixing(qdist(rng));
    const double lambda_t = tdist(rng);
    const Spectrum analytic =
        analytic_eigenvalues_phase_flip(p, unruh, lambda_t);
    const Spectrum numeric = hermitian_eigenvalues(
        phase_flip_evolve(unruh_joint_state(p, unruh), lambda_t));
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(analytic[i] - numeric[i]) < 1e-10);
    }
  }
}

TEST_CASE("channel names") {
  CHECK(parse_channel("phase") == ChannelKind::PhaseFlip);
  CHECK(parse_channel("bit") == ChannelKind::BitFlip);
  CHECK(parse_channel("phase-bit") == ChannelKind::PhaseBitFlip);
  CHECK(to_string(ChannelKind::PhaseBitFlip) == "phase-bit");
  CHECK_THROWS_AS(parse_channel("amplitude"), ParseError);
}
