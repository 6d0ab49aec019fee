// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/halfline_spectrum.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <sstream>

namespace mpnormal {

std::string to_string(NotEigenvalueReason r) {
  switch (r) {
    case NotEigenvalueReason::LeftGrowth: return "left-growth";
    case NotEigenvalueReason::RightGrowth: return "right-growth";
    case NotEigenvalueReason::Marginal: return "marginal";
  }
  return "?";
}

PointSpectrumVerdict point_spectrum_check(const MultipointProblem& p,
                                          const ExtensionParams& e,
                                          Complex lambda) {
  (void)p;
  (void)e;
  // A candidate eigenfunction with kernel boundary data reduces to the pure
  // exponentials e^{lambda (t - a1)} f1* and e^{lambda (t - a3)} f3*.
  // One of the two always fails to be square-integrable unless it vanishes.
  constexpr double kMarginal = 1e-12;
  NotEigenvalueReason reason;
  if (lambda.real() > kMarginal) {
    reason = NotEigenvalueReason::RightGrowth;
  } else if (lambda.real() < -kMarginal) {
    reason = NotEigenvalueReason::LeftGrowth;
  } else {
    reason = NotEigenvalueReason::Marginal;
  }
  return {lambda, reason};
}

HalflineContinuousResult continuous_spectrum(const MultipointProblem& p,
                                             const ExtensionParams& e,
                                             double tol) {
  (void)e;
  HalflineContinuousResult r;
  const auto& ev1 = p.A1.eigensystem().eigenvalues;
  const auto& ev3 = p.A3.eigensystem().eigenvalues;
  r.sigma_a1.assign(ev1.data(), ev1.data() + ev1.size());
  r.sigma_a3.assign(ev3.data(), ev3.data() + ev3.size());

  const double cut = tol * std::max({1.0, p.A1.norm(), p.A3.norm()});
  for (double x : r.sigma_a1) {
    for (double y : r.sigma_a3) {
      if (std::abs(x - y) <= cut) {
        const double point = (x + y) / 2.0;
        if (std::abs(point) > cut) {
          std::ostringstream os;
          os << "continuous_spectrum: sigma(A1) and sigma(A3) intersect at "
             << point << ", inconsistent with the declared sign constraints";
          throw ValidationError(os.str());
        }
        r.intersection.push_back(point);
      }
    }
  }
  r.descriptor = "iR";
  return r;
}

double witness_integrand(double t, double a1, WitnessSign sign) {
  const double s = sign == WitnessSign::Printed ? -(t - a1) : (t - a1);
  // (e^s - 1)^2 with s = a1 - t for the printed form.
  const double e1 = std::exp(s);
  return e1 * e1 - 2.0 * e1 + 1.0;
}

double witness_integral(double t_trunc, WitnessSign sign) {
  const double T = t_trunc;
  if (T < 0.0) throw ValidationError("witness_integral: T must be nonnegative");
  if (sign == WitnessSign::Printed) {
    // int_0^T (e^{2s} - 2 e^s + 1) ds
    return (std::exp(2.0 * T) - 1.0) / 2.0 - 2.0 * (std::exp(T) - 1.0) + T;
  }
  // int_0^T (e^{-2s} - 2 e^{-s} + 1) ds
  return T - 1.5 + 2.0 * std::exp(-T) - std::exp(-2.0 * T) / 2.0;
}

NonSurjectivityWitness nonsurjectivity_witness(const MultipointProblem& p,
                                               const ExtensionParams& e,
                                               double lambda_i,
                                               const std::vector<double>& t_list,
                                               WitnessSign sign) {
  (void)e;
  const Matrix k1 = kernel_basis(p.A1);
  if (k1.cols() == 0) {
    throw ValidationError(
        "nonsurjectivity_witness: ker(-A1)^{1/2} is trivial, no witness");
  }
  NonSurjectivityWitness w;
  w.lambda_i = lambda_i;
  w.f_star = k1.col(0);
  const double fs2 = w.f_star.squaredNorm();
  double prev = -1.0;
  for (double t : t_list) {
    if (t <= prev) {
      throw ValidationError("nonsurjectivity_witness: T_list must be ascending");
    }
    prev = t;
    w.truncated_norms.emplace_back(t, witness_integral(t, sign) * fs2);
  }
  return w;
}

HalflineSpectrumResult full_halfline_spectrum(const MultipointProblem& p,
                                              const ExtensionParams& e,
                                              std::size_t grid_samples,
                                              unsigned seed, par::Mode mode) {
  HalflineSpectrumResult r;
  r.continuous = continuous_spectrum(p, e);
  r.residual_descriptor = "empty";
  r.continuous_descriptor = r.continuous.descriptor;

  // Deterministic sample coordinates, then an embarrassingly parallel sweep.
  std::vector<Complex> samples(grid_samples);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (auto& s : samples) {
    const double re = dist(rng);
    const double im = dist(rng);
    s = Complex{re, im};
  }
  std::atomic<std::size_t> consistent{0};
  par::for_each_index(
      samples.size(),
      [&](std::size_t i) {
        const PointSpectrumVerdict v = point_spectrum_check(p, e, samples[i]);
        const double re = samples[i].real();
        const bool ok =
            (v.reason == NotEigenvalueReason::Marginal && std::abs(re) <= 1e-12) ||
            (v.reason == NotEigenvalueReason::RightGrowth && re > 1e-12) ||
            (v.reason == NotEigenvalueReason::LeftGrowth && re < -1e-12);
        if (ok) consistent.fetch_add(1, std::memory_order_relaxed);
      },
      mode);
  r.certificate_samples = grid_samples;
  r.certificate_pass = consistent.load() == grid_samples;
  r.point_empty = r.certificate_pass;
  return r;
}

}  // namespace mpnormal
