// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mpnormal/halfline_spectrum.hpp"
#include "mpnormal/interval_spectrum.hpp"

namespace mpnormal {

// Tiny closed algebra of spectral set descriptors: the empty set, enumerated
// point sets, the imaginary axis, the axis minus an enumerated set, and
// unions. Membership at a point is the universal query.
class SpectrumSet {
 public:
  static SpectrumSet empty();
  static SpectrumSet points(std::vector<Complex> pts);
  static SpectrumSet imaginary_axis();
  static SpectrumSet axis_minus(std::vector<Complex> excluded);
  static SpectrumSet unite(std::vector<SpectrumSet> parts);

  bool contains(Complex lambda, double tol = 1e-9) const;
  bool is_empty_descriptor() const { return kind_ == Kind::Empty; }
  const std::vector<Complex>& enumerated() const { return pts_; }
  std::string to_string() const;

 private:
  enum class Kind { Empty, Points, Axis, AxisMinusPoints, Union };
  Kind kind_ = Kind::Empty;
  std::vector<Complex> pts_;
  std::vector<SpectrumSet> parts_;
};

struct SpectrumResult {
  std::vector<IntervalEigenvalue> point;  // enumerated within the window
  SpectrumSet point_set;                  // same points as a descriptor
  SpectrumSet residual;                   // always empty for normal extensions
  SpectrumSet continuous;
  std::string point_provenance;
  std::string residual_provenance;
  std::string continuous_provenance;
  std::vector<Complex> excluded_imaginary;  // eigenvalues removed from iR
};

// Union of enumerated point sets with duplicate merging at `tol`.
std::vector<Complex> direct_sum_point(const std::vector<Complex>& s1,
                                      const std::vector<Complex>& s2,
                                      double tol = 1e-10);

SpectrumResult full_spectrum(const MultipointProblem& p,
                             const ExtensionParams& e,
                             const BranchWindow& window);

}  // namespace mpnormal
