// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "mpnormal/operator_model.hpp"

namespace mpnormal {

enum class IntervalTag { Left, Middle, Right };

struct ExpTerm {
  Complex rate;  // c in e^{c (t - anchor)}
  Vector coeff;  // h
};

// Closed-form exponential-sum vector function on one of the three intervals:
//   u(t) = sum_k e^{c_k (t - anchor)} h_k.
// Left functions live on (-inf, anchor) and need Re c > 0; right functions on
// (anchor, +inf) need Re c < 0; middle functions on (anchor, end).
class TestFunction {
 public:
  TestFunction(IntervalTag tag, double anchor, std::vector<ExpTerm> terms,
               double end = 0.0);

  static TestFunction zero(IntervalTag tag, double anchor, int dim,
                           double end = 0.0);

  IntervalTag tag() const { return tag_; }
  double anchor() const { return anchor_; }
  double end() const { return end_; }  // middle only
  int dim() const { return dim_; }
  const std::vector<ExpTerm>& terms() const { return terms_; }

  Vector value(double t) const;
  Vector anchor_value() const;  // sum of coefficients, exact
  Vector end_value() const;     // middle only: sum e^{c (end - anchor)} h

  // -i u' : each term picks up a factor -i c.
  TestFunction apply_momentum() const;
  // u' alone.
  TestFunction derivative() const;
  // t -> A u(t), same profile with mapped coefficients.
  TestFunction apply_operator(const HermitianOperator& a) const;

 private:
  IntervalTag tag_;
  double anchor_;
  double end_;
  int dim_;
  std::vector<ExpTerm> terms_;
};

// L2 pairing (u, v) over the function's interval, evaluated from the exact
// antiderivative of e^{(c_u + conj(c_v)) s}. Throws IntegrabilityError for a
// non-decaying half-line pairing.
Complex l2_pairing(const TestFunction& u, const TestFunction& v);

inline double l2_norm_sq(const TestFunction& u) {
  return l2_pairing(u, u).real();
}

struct BoundaryPair {
  Vector gamma1;
  Vector gamma2;
};

using HalflinePair = std::pair<TestFunction, TestFunction>;  // (left, right)

// gamma1 = (u3(a3) + u1(a1)) / (i sqrt2), gamma2 = (u3(a3) - u1(a1)) / sqrt2.
BoundaryPair boundary_maps_halfline(const TestFunction& u_left,
                                    const TestFunction& u_right);

// gamma1 = (u2(b2) + u2(a2)) / (i sqrt2), gamma2 = (u2(b2) - u2(a2)) / sqrt2.
BoundaryPair boundary_maps_interval(const TestFunction& u_mid);

// (M* u, v) - (u, M* v) - [(Y1 u, Y2 v) - (Y2 u, Y1 v)] for M* = -i d/dt
// acting componentwise on the (left, right) pair.
Complex green_identity_residual(const HalflinePair& u, const HalflinePair& v);

// Same identity on the finite interval with the Gamma maps.
Complex green_identity_residual_interval(const TestFunction& u,
                                         const TestFunction& v);

// Unit-rate exponential pair with boundary values (i f - g)/sqrt2 at a1 and
// (i f + g)/sqrt2 at a3; boundary_maps_halfline of it returns (f, g).
HalflinePair surjectivity_witness(const Vector& f, const Vector& g,
                                  double a1 = 0.0, double a3 = 1.0);

}  // namespace mpnormal
