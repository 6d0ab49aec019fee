// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mpnormal/boundary_triplet.hpp"
#include "mpnormal/extension_builder.hpp"
#include "mpnormal/parallel.hpp"

namespace mpnormal {

enum class FDScheme {
  Upwind,   // (u_{j+1} - u_j)/h + A2 u_j, matches the one-sided d/dt
  Central,  // (u_{j+1} - u_{j-1})/(2h) + A2 u_j with quasi-periodic wrap
};

struct FDEigenResult {
  int grid_size = 0;
  std::vector<Complex> eigenvalues;  // all m*dim of them
  // Observed convergence order from grids m/4, m/2, m; NaN when the tracked
  // differences fall below eigensolver noise. Diagnostic, not an assertion.
  double order_estimate = 0.0;
};

// Dense one-step discretization of u' + A2 u = lambda u with the coupling row
// u_m = W2 u_0 eliminated into the system.
Matrix fd_matrix(const MultipointProblem& p, const UnitaryOperator& w2, int m,
                 FDScheme scheme = FDScheme::Upwind);

FDEigenResult fd_interval_eigenvalues(const MultipointProblem& p,
                                      const UnitaryOperator& w2, int m,
                                      FDScheme scheme = FDScheme::Upwind,
                                      bool estimate_order = false);

// All eigenvalues of a dense complex matrix (LAPACK zgeev).
std::vector<Complex> dense_complex_eigenvalues(const Matrix& m);

// ||L L* - L* L||_F / ||L||_F^2 for the discretized operator; reported next
// to ||[W2, A2]|| for empirical correlation, never gated.
double normality_probe(const MultipointProblem& p, const UnitaryOperator& w2,
                       int m);

// Cosine Neumann-basis truncation of the heat-type system: diagonal modes
// -(k pi)^2, (k pi)^2 + 1, (k pi)^2 with scalar phases.
std::pair<MultipointProblem, ExtensionParams> build_example35(int n, double phi,
                                                              double psi);

// Composite 32-point Gauss-Legendre squared L2 norm over a finite interval.
double quadrature_l2(const TestFunction& f, double t0, double t1,
                     par::Mode mode = par::Mode::OpenMP);

// Composite 32-point Gauss-Legendre integral of a scalar function.
double quadrature(const std::function<double(double)>& f, double t0, double t1,
                  par::Mode mode = par::Mode::OpenMP);

// Largest, over `analytic`, relative distance to the nearest entry of `fd`.
double max_relative_match_error(const std::vector<Complex>& analytic,
                                const std::vector<Complex>& fd);

}  // namespace mpnormal
