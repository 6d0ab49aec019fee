// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "mpnormal/halfline_spectrum.hpp"
#include "mpnormal/validation_oracle.hpp"

using namespace mpnormal;

namespace {

HermitianOperator diag_op(std::initializer_list<double> vals,
                          SignConstraint sc) {
  Eigen::VectorXd d(static_cast<int>(vals.size()));
  int i = 0;
  for (double v : vals) d[i++] = v;
  return HermitianOperator(Matrix(d.cast<Complex>().asDiagonal()), sc);
}

MultipointProblem scalar_problem() {
  return MultipointProblem(-1.0, 0.0, 1.0, 2.0,
                           diag_op({0.0}, SignConstraint::NonPositive),
                           diag_op({2.0}, SignConstraint::NonNegative),
                           diag_op({0.0}, SignConstraint::NonNegative));
}

}  // namespace

TEST_CASE("point spectrum trichotomy on explicit samples") {
  const MultipointProblem p = scalar_problem();
  const ExtensionParams e = scalar_extension(0.0, 0.0);
  CHECK(point_spectrum_check(p, e, Complex{1, 0}).reason ==
        NotEigenvalueReason::RightGrowth);
  CHECK(point_spectrum_check(p, e, Complex{-2, 3}).reason ==
        NotEigenvalueReason::LeftGrowth);
  CHECK(point_spectrum_check(p, e, Complex{0, 5}).reason ==
        NotEigenvalueReason::Marginal);
}

TEST_CASE("trichotomy is total and sign-consistent on 200 random samples") {
  const MultipointProblem p = scalar_problem();
  const ExtensionParams e = scalar_extension(0.3, 1.1);
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    const Complex lambda{dist(rng), dist(rng)};
    const PointSpectrumVerdict v = point_spectrum_check(p, e, lambda);
    switch (v.reason) {
      case NotEigenvalueReason::RightGrowth:
        CHECK(lambda.real() > 0.0);
        break;
      case NotEigenvalueReason::LeftGrowth:
        CHECK(lambda.real() < 0.0);
        break;
      case NotEigenvalueReason::Marginal:
        CHECK(std::abs(lambda.real()) <= 1e-12);
        break;
    }
  }
}

TEST_CASE("continuous spectrum bookkeeping") {
  SUBCASE("kernels overlap only at zero") {
    const MultipointProblem p(
        -1.0, 0.0, 0.5, 1.5, diag_op({-1.0, 0.0}, SignConstraint::NonPositive),
        diag_op({1.0, 3.0}, SignConstraint::NonNegative),
        diag_op({0.0, 2.0}, SignConstraint::NonNegative));
    const ExtensionParams e{UnitaryOperator(Matrix::Identity(2, 2)),
                            UnitaryOperator(Matrix::Identity(2, 2))};
    const HalflineContinuousResult r = continuous_spectrum(p, e);
    CHECK(r.descriptor == "iR");
    REQUIRE(r.intersection.size() == 1);
    CHECK(r.intersection[0] == doctest::Approx(0.0));
    CHECK(r.sigma_a1 == std::vector<double>{-1.0, 0.0});
  }
  SUBCASE("disjoint spectra have empty intersection") {
    const MultipointProblem p(
        -1.0, 0.0, 1.0, 2.0, diag_op({-1.0}, SignConstraint::NonPositive),
        diag_op({1.0}, SignConstraint::NonNegative),
        diag_op({2.0}, SignConstraint::NonNegative));
    const ExtensionParams e = scalar_extension(0.0, 0.0);
    CHECK(continuous_spectrum(p, e).intersection.empty());
  }
}

TEST_CASE("witness integral closed forms") {
  SUBCASE("value at zero truncation") {
    CHECK(witness_integral(0.0, WitnessSign::Printed) == doctest::Approx(0.0));
    CHECK(witness_integral(0.0, WitnessSign::Decaying) == doctest::Approx(0.0));
  }
  SUBCASE("gauss quadrature agreement for both variants") {
    const double a1 = -1.0;
    for (WitnessSign sign : {WitnessSign::Printed, WitnessSign::Decaying}) {
      for (double T : {1.0, 3.0, 6.0}) {
        const double closed = witness_integral(T, sign);
        const double quad = quadrature(
            [&](double t) { return witness_integrand(t, a1, sign); }, a1 - T,
            a1, par::Mode::Serial);
        CHECK(std::abs(quad - closed) <= 1e-9 * std::max(1.0, closed));
      }
    }
  }
  SUBCASE("decaying variant diverges linearly: value / T -> 1") {
    CHECK(witness_integral(50.0, WitnessSign::Decaying) / 50.0 ==
          doctest::Approx(1.0).epsilon(0.05));
  }
  SUBCASE("negative truncation is rejected") {
    CHECK_THROWS_AS(witness_integral(-1.0, WitnessSign::Printed),
                    ValidationError);
  }
}

TEST_CASE("nonsurjectivity witness") {
  const MultipointProblem p = scalar_problem();
  const ExtensionParams e = scalar_extension(0.0, 0.0);
  const NonSurjectivityWitness w =
      nonsurjectivity_witness(p, e, 1.0, {1.0, 2.0, 4.0, 8.0});
  REQUIRE(w.truncated_norms.size() == 4);
  CHECK(w.f_star.norm() == doctest::Approx(1.0));
  for (std::size_t i = 1; i < w.truncated_norms.size(); ++i) {
    CHECK(w.truncated_norms[i].second > w.truncated_norms[i - 1].second);
  }

  // A problem with injective A1 has no kernel vector to build the witness on.
  const MultipointProblem inj(
      -1.0, 0.0, 1.0, 2.0, diag_op({-1.0}, SignConstraint::NonPositive),
      diag_op({1.0}, SignConstraint::NonNegative),
      diag_op({0.0}, SignConstraint::NonNegative));
  CHECK_THROWS_AS(nonsurjectivity_witness(inj, e, 1.0, {1.0}),
                  ValidationError);
  CHECK_THROWS_AS(nonsurjectivity_witness(p, e, 1.0, {2.0, 1.0}),
                  ValidationError);
}

TEST_CASE("full halfline spectrum: certified empty point part, axis continuous") {
  const MultipointProblem p = scalar_problem();
  const ExtensionParams e = scalar_extension(0.0, 0.5);
  const HalflineSpectrumResult serial =
      full_halfline_spectrum(p, e, 500, 42, par::Mode::Serial);
  CHECK(serial.point_empty);
  CHECK(serial.certificate_pass);
  CHECK(serial.certificate_samples == 500);
  CHECK(serial.residual_descriptor == "empty");
  CHECK(serial.continuous_descriptor == "iR");

  // The OpenMP sweep must agree with the serial reference bit for bit.
  const HalflineSpectrumResult parallel =
      full_halfline_spectrum(p, e, 500, 42, par::Mode::OpenMP);
  CHECK(parallel.certificate_pass == serial.certificate_pass);
  CHECK(parallel.point_empty == serial.point_empty);
}
