// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mpnormal/boundary_triplet.hpp"
#include "mpnormal/extension_builder.hpp"

namespace mpnormal {

// Truncation of the branch index: either an explicit n range or a bound on
// |Im lambda|.
struct BranchWindow {
  static BranchWindow n_range(int n_min, int n_max);
  static BranchWindow im_bound(double bound);
  // |Im lambda| <= 10 * (2 pi / tau).
  static BranchWindow default_for(double tau);

  std::optional<std::pair<int, int>> n;
  std::optional<double> bound;
};

// One solution of e^{-lambda tau} = mu. |mu| is tracked in log form so large
// decay exponents survive; `mu` itself may underflow to zero.
struct IntervalEigenvalue {
  Complex lambda;
  Complex mu;
  double log_abs_mu = 0.0;
  double arg_mu = 0.0;  // in [0, 2 pi)
  int branch_n = 0;
  Vector eigvec;        // f2* in the ambient basis
  Vector eigvec_modal;  // f2* in the A2 eigenbasis
  double conditioning = 1.0;
  double residual = 0.0;  // characteristic certificate
};

struct MonodromyResult {
  Matrix matrix;  // W2^* e^{-A2 tau}
  bool underflow_warning = false;
};

MonodromyResult monodromy(const MultipointProblem& p, const UnitaryOperator& w2);

// All branch solutions inside the window, sorted by (Re, Im). When W2 and A2
// commute within tolerance the computation stays in the A2 eigenbasis and
// log|mu| is formed as -alpha tau directly, so arbitrarily strong decay is
// handled without underflow.
std::vector<IntervalEigenvalue> interval_eigenvalues(const MultipointProblem& p,
                                                     const UnitaryOperator& w2,
                                                     const BranchWindow& window);

// u2(t) = e^{-(A2 - lambda)(t - a2)} f2*, t in [a2, b2].
Vector eigenfunction(const MultipointProblem& p, const UnitaryOperator& w2,
                     const IntervalEigenvalue& ev, double t);

// Solution of u' + A2 u = lambda u + f2 with u(b2) = W2 u(a2); the
// convolution with an exponential-profile source is evaluated in closed form.
class ResolventSolution {
 public:
  ResolventSolution(HermitianOperator a2, Complex lambda, double anchor,
                    Vector f_star, TestFunction source);

  Vector value(double t) const;
  const Vector& f_star() const { return f_star_; }
  Complex lambda() const { return lambda_; }

 private:
  Vector particular(double t) const;

  HermitianOperator a2_;
  Complex lambda_;
  double anchor_;
  Vector f_star_;
  TestFunction source_;
};

ResolventSolution resolvent_apply(const MultipointProblem& p,
                                  const UnitaryOperator& w2, Complex lambda,
                                  const TestFunction& f2);

}  // namespace mpnormal
