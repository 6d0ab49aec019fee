// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "mpnormal/composite_spectrum.hpp"
#include "mpnormal/config.hpp"
#include "mpnormal/validation_oracle.hpp"

using namespace mpnormal;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("spectrum set algebra membership") {
  const SpectrumSet e = SpectrumSet::empty();
  CHECK_FALSE(e.contains(Complex{0, 0}));
  CHECK(e.is_empty_descriptor());

  const SpectrumSet pts = SpectrumSet::points({{1, 2}, {3, -4}});
  CHECK(pts.contains(Complex{1, 2}));
  CHECK(pts.contains(Complex{1 + 1e-10, 2}));
  CHECK_FALSE(pts.contains(Complex{1, 2.1}));

  const SpectrumSet axis = SpectrumSet::imaginary_axis();
  CHECK(axis.contains(Complex{0, 17.5}));
  CHECK_FALSE(axis.contains(Complex{0.1, 0}));
  CHECK(axis.to_string() == "iR");

  const SpectrumSet punctured = SpectrumSet::axis_minus({{0, 1}});
  CHECK(punctured.contains(Complex{0, 2}));
  CHECK_FALSE(punctured.contains(Complex{0, 1}));
  CHECK_FALSE(punctured.contains(Complex{1, 1}));

  const SpectrumSet u = SpectrumSet::unite({pts, punctured});
  CHECK(u.contains(Complex{3, -4}));
  CHECK(u.contains(Complex{0, 2}));
  CHECK_FALSE(u.contains(Complex{0, 1}));

  // Removing nothing collapses to the plain axis.
  CHECK(SpectrumSet::axis_minus({}).to_string() == "iR");
}

TEST_CASE("direct sum of point spectra merges duplicates") {
  const std::vector<Complex> s1{{0, 0}, {1, 1}};
  const std::vector<Complex> s2{{1, 1 + 1e-12}, {2, 0}};
  const auto u = direct_sum_point(s1, s2);
  REQUIRE(u.size() == 3);
  CHECK(u[0] == Complex{0, 0});
  CHECK(u[2] == Complex{2, 0});
}

TEST_CASE("block-diagonal direct sum: eigenvalue union oracle") {
  // For finite blocks the point spectrum of diag(B1, B2) is the union of the
  // block spectra; compare the merge against a dense eigensolve of the
  // assembled block-diagonal matrix.
  const Matrix b1 = test::random_matrix(3);
  const Matrix b2 = test::random_matrix(4);
  Matrix full = Matrix::Zero(7, 7);
  full.topLeftCorner(3, 3) = b1;
  full.bottomRightCorner(4, 4) = b2;

  const std::vector<Complex> e1 = dense_complex_eigenvalues(b1);
  const std::vector<Complex> e2 = dense_complex_eigenvalues(b2);
  const std::vector<Complex> merged = direct_sum_point(e1, e2, 1e-12);
  const std::vector<Complex> direct = dense_complex_eigenvalues(full);

  REQUIRE(merged.size() == 7);  // random blocks: no accidental collisions
  for (Complex z : merged) {
    double best = 1e300;
    for (Complex w : direct) best = std::min(best, std::abs(z - w));
    CHECK(best <= 1e-10);
  }
  for (Complex w : direct) {
    double best = 1e300;
    for (Complex z : merged) best = std::min(best, std::abs(z - w));
    CHECK(best <= 1e-10);
  }
}

TEST_CASE("full spectrum of the scalar phase preset") {
  const ProblemConfig c = make_preset("scalar-phase");
  const SpectrumResult r = full_spectrum(c.problem, c.extension, c.window());
  REQUIRE(!r.point.empty());
  CHECK(r.point_set.contains(Complex{2.0, kPi / 2.0}, 1e-10));
  // No eigenvalue sits on the axis, so the continuous part is the full axis.
  CHECK(r.excluded_imaginary.empty());
  CHECK(r.continuous.to_string() == "iR");
  CHECK(r.continuous.contains(Complex{0, 0.3}));
  CHECK(r.residual.is_empty_descriptor());
}

TEST_CASE("full spectrum of the scalar periodic preset punctures the axis") {
  const ProblemConfig c = make_preset("scalar-periodic");
  const SpectrumResult r = full_spectrum(c.problem, c.extension, c.window());
  CHECK(!r.excluded_imaginary.empty());
  CHECK(r.point_set.contains(Complex{0, 2.0 * kPi}, 1e-10));
  // A point eigenvalue is removed from the continuous descriptor...
  CHECK_FALSE(r.continuous.contains(Complex{0, 2.0 * kPi}));
  // ...while nearby axis points remain.
  CHECK(r.continuous.contains(Complex{0, 1.0}));
  CHECK(r.continuous.to_string().rfind("iR \\", 0) == 0);
}

TEST_CASE("full spectrum refuses non-normal parameters") {
  const ProblemConfig c = make_preset("unequal-kernel");
  CHECK_THROWS_AS(full_spectrum(c.problem, c.extension, c.window()),
                  ValidationError);
}

TEST_CASE("composed membership equals componentwise membership on samples") {
  // The composed operator's spectrum is (interval point set) union
  // (axis from the half-lines); membership of the assembled descriptors must
  // agree with the componentwise rule at random probes.
  const ProblemConfig c = make_preset("scalar-periodic");
  const SpectrumResult r = full_spectrum(c.problem, c.extension, c.window());
  const SpectrumSet composed =
      SpectrumSet::unite({r.point_set, r.continuous});
  const SpectrumSet componentwise = SpectrumSet::unite(
      {r.point_set, SpectrumSet::imaginary_axis()});

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> im(-40.0, 40.0);
  std::bernoulli_distribution on_axis(0.5);
  for (int i = 0; i < 1000; ++i) {
    const Complex z{on_axis(rng) ? 0.0 : re(rng), im(rng)};
    CHECK(composed.contains(z) == componentwise.contains(z));
  }
}

TEST_CASE("cosine truncation spectrum: leading real parts") {
  const auto [p, e] = build_example35(16, 0.0, 0.0);
  const SpectrumResult r = full_spectrum(p, e, BranchWindow::n_range(0, 0));
  REQUIRE(!r.point.empty());
  CHECK(r.point.front().lambda.real() == doctest::Approx(1.0).epsilon(1e-12));
  // Second distinct real part is 1 + pi^2.
  double second = 0.0;
  for (const auto& ev : r.point) {
    if (ev.lambda.real() > 1.0 + 1e-9) {
      second = ev.lambda.real();
      break;
    }
  }
  CHECK(second == doctest::Approx(1.0 + kPi * kPi).epsilon(1e-12));
  CHECK(r.continuous.to_string() == "iR");
}
