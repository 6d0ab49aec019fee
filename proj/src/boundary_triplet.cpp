// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/boundary_triplet.hpp"

#include <cmath>
#include <sstream>

namespace mpnormal {

namespace {
constexpr Complex kI{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TestFunction::TestFunction(IntervalTag tag, double anchor,
                           std::vector<ExpTerm> terms, double end)
    : tag_(tag), anchor_(anchor), end_(end), terms_(std::move(terms)) {
  if (terms_.empty()) throw ValidationError("TestFunction: needs at least one term");
  dim_ = static_cast<int>(terms_.front().coeff.size());
  for (const auto& term : terms_) {
    if (term.coeff.size() != dim_) {
      throw DimensionError("TestFunction: mixed coefficient dimensions");
    }
    if (tag_ == IntervalTag::Left && term.rate.real() <= 0.0) {
      throw ValidationError(
          "TestFunction: left-interval term needs Re c > 0 for decay at -inf");
    }
    if (tag_ == IntervalTag::Right && term.rate.real() >= 0.0) {
      throw ValidationError(
          "TestFunction: right-interval term needs Re c < 0 for decay at +inf");
    }
  }
  if (tag_ == IntervalTag::Middle && end_ <= anchor_) {
    throw ValidationError("TestFunction: middle interval needs end > anchor");
  }
}

TestFunction TestFunction::zero(IntervalTag tag, double anchor, int dim,
                                double end) {
  const Complex rate = tag == IntervalTag::Right ? Complex{-1.0, 0.0}
                                                 : Complex{1.0, 0.0};
  return TestFunction(tag, anchor, {{rate, Vector::Zero(dim)}},
                      tag == IntervalTag::Middle ? end : anchor + 1.0);
}

Vector TestFunction::value(double t) const {
  Vector v = Vector::Zero(dim_);
  for (const auto& term : terms_) {
    v += std::exp(term.rate * (t - anchor_)) * term.coeff;
  }
  return v;
}

Vector TestFunction::anchor_value() const {
  Vector v = Vector::Zero(dim_);
  for (const auto& term : terms_) v += term.coeff;
  return v;
}

Vector TestFunction::end_value() const {
  if (tag_ != IntervalTag::Middle) {
    throw ValidationError("TestFunction: end_value is middle-interval only");
  }
  Vector v = Vector::Zero(dim_);
  for (const auto& term : terms_) {
    v += std::exp(term.rate * (end_ - anchor_)) * term.coeff;
  }
  return v;
}

TestFunction TestFunction::apply_momentum() const {
  std::vector<ExpTerm> mapped = terms_;
  for (auto& term : mapped) term.coeff = (-kI * term.rate) * term.coeff;
  return TestFunction(tag_, anchor_, std::move(mapped), end_);
}

TestFunction TestFunction::derivative() const {
  std::vector<ExpTerm> mapped = terms_;
  for (auto& term : mapped) term.coeff = term.rate * term.coeff;
  return TestFunction(tag_, anchor_, std::move(mapped), end_);
}

TestFunction TestFunction::apply_operator(const HermitianOperator& a) const {
  if (a.dim() != dim_) throw DimensionError("apply_operator: dimension mismatch");
  std::vector<ExpTerm> mapped = terms_;
  for (auto& term : mapped) term.coeff = a.entries() * term.coeff;
  return TestFunction(tag_, anchor_, std::move(mapped), end_);
}

Complex l2_pairing(const TestFunction& u, const TestFunction& v) {
  if (u.tag() != v.tag()) {
    throw ValidationError("l2_pairing: functions live on different intervals");
  }
  if (u.dim() != v.dim()) throw DimensionError("l2_pairing: dimension mismatch");
  Complex total = 0.0;
  const double length = u.end() - u.anchor();
  for (const auto& tu : u.terms()) {
    for (const auto& tv : v.terms()) {
      const Complex w = inner(tu.coeff, tv.coeff);
      const Complex gamma = tu.rate + std::conj(tv.rate);
      switch (u.tag()) {
        case IntervalTag::Left:
          // s in (-inf, 0): integral of e^{gamma s} is 1/gamma, Re gamma > 0.
          if (gamma.real() <= 0.0) {
            throw IntegrabilityError("l2_pairing: divergent left pairing");
          }
          total += w / gamma;
          break;
        case IntervalTag::Right:
          if (gamma.real() >= 0.0) {
            throw IntegrabilityError("l2_pairing: divergent right pairing");
          }
          total += -w / gamma;
          break;
        case IntervalTag::Middle: {
          const Complex x = gamma * length;
          if (std::abs(x) < 1e-8) {
            total += w * length * (1.0 + x / 2.0 + x * x / 6.0);
          } else {
            total += w * (std::exp(x) - 1.0) / gamma;
          }
          break;
        }
      }
    }
  }
  return total;
}

BoundaryPair boundary_maps_halfline(const TestFunction& u_left,
                                    const TestFunction& u_right) {
  if (u_left.tag() != IntervalTag::Left || u_right.tag() != IntervalTag::Right) {
    throw ValidationError("boundary_maps_halfline: expected a (left, right) pair");
  }
  if (u_left.dim() != u_right.dim()) {
    throw DimensionError("boundary_maps_halfline: dimension mismatch");
  }
  const Vector at_a1 = u_left.anchor_value();
  const Vector at_a3 = u_right.anchor_value();
  return {(at_a3 + at_a1) / (kI * kSqrt2), (at_a3 - at_a1) / kSqrt2};
}

BoundaryPair boundary_maps_interval(const TestFunction& u_mid) {
  if (u_mid.tag() != IntervalTag::Middle) {
    throw ValidationError("boundary_maps_interval: expected a middle function");
  }
  const Vector at_a2 = u_mid.anchor_value();
  const Vector at_b2 = u_mid.end_value();
  return {(at_b2 + at_a2) / (kI * kSqrt2), (at_b2 - at_a2) / kSqrt2};
}

Complex green_identity_residual(const HalflinePair& u, const HalflinePair& v) {
  const TestFunction mu_l = u.first.apply_momentum();
  const TestFunction mu_r = u.second.apply_momentum();
  const TestFunction mv_l = v.first.apply_momentum();
  const TestFunction mv_r = v.second.apply_momentum();

  const Complex lhs = l2_pairing(mu_l, v.first) + l2_pairing(mu_r, v.second) -
                      l2_pairing(u.first, mv_l) - l2_pairing(u.second, mv_r);

  const BoundaryPair yu = boundary_maps_halfline(u.first, u.second);
  const BoundaryPair yv = boundary_maps_halfline(v.first, v.second);
  // a1 is a right endpoint and a3 a left endpoint, so the boundary form
  // carries the opposite orientation to the finite-interval case; the
  // boundary pairing is ordered accordingly.
  const Complex rhs =
      inner(yu.gamma2, yv.gamma1) - inner(yu.gamma1, yv.gamma2);
  return lhs - rhs;
}

Complex green_identity_residual_interval(const TestFunction& u,
                                         const TestFunction& v) {
  const Complex lhs = l2_pairing(u.apply_momentum(), v) -
                      l2_pairing(u, v.apply_momentum());
  const BoundaryPair gu = boundary_maps_interval(u);
  const BoundaryPair gv = boundary_maps_interval(v);
  const Complex rhs =
      inner(gu.gamma1, gv.gamma2) - inner(gu.gamma2, gv.gamma1);
  return lhs - rhs;
}

HalflinePair surjectivity_witness(const Vector& f, const Vector& g, double a1,
                                  double a3) {
  if (f.size() != g.size()) {
    throw DimensionError("surjectivity_witness: f and g must share dim");
  }
  const Vector left_coeff = (kI * f - g) / kSqrt2;
  const Vector right_coeff = (kI * f + g) / kSqrt2;
  TestFunction u1(IntervalTag::Left, a1, {{Complex{1.0, 0.0}, left_coeff}});
  TestFunction u3(IntervalTag::Right, a3, {{Complex{-1.0, 0.0}, right_coeff}});
  return {std::move(u1), std::move(u3)};
}

}  // namespace mpnormal
