#include <doctest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "unruhdec/states.hpp"

using namespace unruhdec;
using unruhdec::testing::random_bell_params;

TEST_CASE("bell_diagonal fixtures") {
  CHECK((bell_diagonal({0.0, 0.0, 0.0}) - 0.25 * Matrix4::Identity())
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // c = (1, -1, 1) is the projector onto (|00> + |11>)/sqrt(2)
  Matrix4 projector = Matrix4::Zero();
  projector(0, 0) = projector(3, 3) = 0.5;
  projector(0, 3) = projector(3, 0) = 0.5;
  CHECK((bell_diagonal({1.0, -1.0, 1.0}) - projector).cwiseAbs().maxCoeff() <
        1e-15);

  const Spectrum s = hermitian_eigenvalues(bell_diagonal({1.0, -0.6, 0.6}));
  CHECK(s[0] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(s[1] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(s[2]) < 1e-12);
  CHECK(std::abs(s[3]) < 1e-12);
}

TEST_CASE("bell_diagonal positivity") {
  CHECK(positivity_residual({1.0, 1.0, 1.0}) == doctest::Approx(0.5));
  CHECK_THROWS_AS(bell_diagonal({1.0, 1.0, 1.0}), InvalidStateError);
  CHECK(positivity_residual({1.0, -0.6, 0.6}) == 0.0);
}

TEST_CASE("bell_diagonal marginals are maximally mixed") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho = bell_diagonal(random_bell_params(rng));
    CHECK((partial_trace_first(rho) - 0.5 * Matrix2::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
    CHECK((partial_trace_second(rho) - 0.5 * Matrix2::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
}

TEST_CASE("UnruhParams mixing and conversions") {
  CHECK(UnruhParams::from_temperature(0.0).mixing() == 0.0);
  CHECK(UnruhParams::from_temperature(
            std::numeric_limits<double>::infinity())
            .mixing() == 1.0);
  CHECK(UnruhParams::from_mixing(0.0).temperature == 0.0);
  CHECK(std::isinf(UnruhParams::from_mixing(1.0).temperature));

  for (double q : {0.1, 0.35, 0.9}) {
    CHECK(UnruhParams::from_mixing(q).mixing() ==
          doctest::Approx(q).epsilon(1e-15));
  }

  const UnruhParams from_acc = UnruhParams::from_acceleration(2.0);
  CHECK(from_acc.temperature ==
        doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-15));
  CHECK(from_acc.acceleration() == doctest::Approx(2.0).epsilon(1e-15));

  CHECK_THROWS_AS(UnruhParams::from_temperature(-0.5), DomainError);
  CHECK_THROWS_AS(UnruhParams::from_temperature(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(UnruhParams::from_mixing(1.5), DomainError);
}

TEST_CASE("unruh_joint_state reduces to bell_diagonal at T = 0") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const BellDiagonalParams params = random_bell_params(rng);
    const DensityMatrix joint =
        unruh_joint_state(params, UnruhParams::from_temperature(0.0));
    CHECK((joint - bell_diagonal(params)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("unruh_joint_state at infinite temperature") {
  const DensityMatrix rho = unruh_joint_state(
      {1.0, -0.6, 0.6},
      UnruhParams::from_temperature(std::numeric_limits<double>::infinity()));
  CHECK(rho(0, 0).real() == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(rho(1, 1).real() == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(rho(2, 2).real() == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(rho(3, 3).real() == doctest::Approx(0.45).epsilon(1e-14));
  CHECK(rho(0, 3).real() ==
        doctest::Approx(0.282842712474619).epsilon(1e-14));
  CHECK(rho(1, 2).real() ==
        doctest::Approx(0.0707106781186547).epsilon(1e-13));
}

TEST_CASE("unruh_joint_state trace and Alice marginal") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> qdist(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const DensityMatrix rho = unruh_joint_state(
        random_bell_params(rng), UnruhParams::from_mixing(qdist(rng)));
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-14);
    CHECK(std::abs(rho.trace().imag()) < 1e-15);
    CHECK((partial_trace_second(rho) - 0.5 * Matrix2::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-14);
  }
}

TEST_CASE("unruh_joint_state is continuous in the mixing weight") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> qdist(0.0, 1.0 - 1e-6);
  const BellDiagonalParams params{1.0, -0.6, 0.6};
  for (int trial = 0; trial < 20; ++trial) {
    const double q = qdist(rng);
    const DensityMatrix a =
        unruh_joint_state(params, UnruhParams::from_mixing(q));
    const DensityMatrix b =
        unruh_joint_state(params, UnruhParams::from_mixing(q + 1e-6));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-5);
  }
}

TEST_CASE("validate reports residuals") {
  CHECK(validate(0.25 * Matrix4::Identity()).ok());

  const ValidationReport trace_bad = validate(0.225 * Matrix4::Identity());
  CHECK(!trace_bad.ok());
  CHECK(trace_bad.trace_residual == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(trace_bad.summary().find("trace") != std::string::npos);

  Matrix4 negative = Matrix4::Zero();
  negative(0, 0) = -0.1;
  negative(1, 1) = 1.1;
  const ValidationReport psd_bad = validate(negative);
  CHECK(!psd_bad.ok());
  CHECK(psd_bad.psd_residual == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(psd_bad.trace_residual < 1e-12);

  Matrix4 skew = 0.25 * Matrix4::Identity();
  skew(0, 1) = Complex(0.0, 1e-6);
  const ValidationReport herm_bad = validate(skew);
  CHECK(!herm_bad.ok());
  CHECK(herm_bad.hermiticity_residual > 1e-7);

  CHECK(validate(unruh_joint_state({1.0, -0.6, 0.6},
                                   UnruhParams::from_mixing(0.5)))
            .ok());
}
