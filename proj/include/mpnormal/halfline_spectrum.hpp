// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "mpnormal/extension_builder.hpp"
#include "mpnormal/parallel.hpp"

namespace mpnormal {

enum class NotEigenvalueReason {
  LeftGrowth,   // Re lambda < 0: the left component leaves L2
  RightGrowth,  // Re lambda > 0: the right component leaves L2
  Marginal,     // Re lambda = 0: constant modulus forces f1* = f3* = 0
};

std::string to_string(NotEigenvalueReason r);

struct PointSpectrumVerdict {
  Complex lambda;
  NotEigenvalueReason reason;
  // The verdict itself is always "not an eigenvalue"; only the reason varies.
};

PointSpectrumVerdict point_spectrum_check(const MultipointProblem& p,
                                          const ExtensionParams& e,
                                          Complex lambda);

// Symbolic continuous-spectrum answer with the real-part elimination data.
struct HalflineContinuousResult {
  std::vector<double> sigma_a1;
  std::vector<double> sigma_a3;
  std::vector<double> intersection;  // must be contained in {0}
  std::string descriptor;            // always "iR"
};

HalflineContinuousResult continuous_spectrum(const MultipointProblem& p,
                                             const ExtensionParams& e,
                                             double tol = kKernelTol);

enum class WitnessSign {
  Printed,   // integrand e^{-2(t-a1)} - 2 e^{-(t-a1)} + 1 (grows to the left)
  Decaying,  // integrand e^{ 2(t-a1)} - 2 e^{ (t-a1)} + 1 (bounded)
};

struct NonSurjectivityWitness {
  double lambda_i = 0.0;
  Vector f_star;
  std::vector<std::pair<double, double>> truncated_norms;  // (T, value)
};

// Truncated squared L2 norms of the non-solvable right-hand side's would-be
// solution over (a1 - T, a1); closed-form antiderivative, divergent in T.
NonSurjectivityWitness nonsurjectivity_witness(
    const MultipointProblem& p, const ExtensionParams& e, double lambda_i,
    const std::vector<double>& t_list, WitnessSign sign = WitnessSign::Printed);

// Closed-form value of one truncated witness integral (without ||f*||^2).
double witness_integral(double t_trunc, WitnessSign sign);
// The pointwise integrand at t < a1, for quadrature cross-checks.
double witness_integrand(double t, double a1, WitnessSign sign);

struct HalflineSpectrumResult {
  bool point_empty = true;
  std::size_t certificate_samples = 0;
  bool certificate_pass = false;
  std::string residual_descriptor;    // "empty"
  std::string continuous_descriptor;  // "iR"
  HalflineContinuousResult continuous;
};

// Point spectrum empty (certified over a sampled lambda grid), residual
// spectrum empty, continuous spectrum the imaginary axis.
HalflineSpectrumResult full_halfline_spectrum(
    const MultipointProblem& p, const ExtensionParams& e,
    std::size_t grid_samples = 200, unsigned seed = 12345,
    par::Mode mode = par::Mode::OpenMP);

}  // namespace mpnormal
