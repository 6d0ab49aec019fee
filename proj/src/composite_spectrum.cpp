// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/composite_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mpnormal {

SpectrumSet SpectrumSet::empty() { return SpectrumSet{}; }

SpectrumSet SpectrumSet::points(std::vector<Complex> pts) {
  SpectrumSet s;
  s.kind_ = Kind::Points;
  s.pts_ = std::move(pts);
  return s;
}

SpectrumSet SpectrumSet::imaginary_axis() {
  SpectrumSet s;
  s.kind_ = Kind::Axis;
  return s;
}

SpectrumSet SpectrumSet::axis_minus(std::vector<Complex> excluded) {
  if (excluded.empty()) return imaginary_axis();
  SpectrumSet s;
  s.kind_ = Kind::AxisMinusPoints;
  s.pts_ = std::move(excluded);
  return s;
}

SpectrumSet SpectrumSet::unite(std::vector<SpectrumSet> parts) {
  SpectrumSet s;
  s.kind_ = Kind::Union;
  s.parts_ = std::move(parts);
  return s;
}

bool SpectrumSet::contains(Complex lambda, double tol) const {
  switch (kind_) {
    case Kind::Empty:
      return false;
    case Kind::Points:
      return std::any_of(pts_.begin(), pts_.end(), [&](Complex p) {
        return std::abs(p - lambda) <= tol;
      });
    case Kind::Axis:
      return std::abs(lambda.real()) <= tol;
    case Kind::AxisMinusPoints:
      if (std::abs(lambda.real()) > tol) return false;
      return std::none_of(pts_.begin(), pts_.end(), [&](Complex p) {
        return std::abs(p - lambda) <= tol;
      });
    case Kind::Union:
      return std::any_of(parts_.begin(), parts_.end(), [&](const SpectrumSet& s) {
        return s.contains(lambda, tol);
      });
  }
  return false;
}

std::string SpectrumSet::to_string() const {
  switch (kind_) {
    case Kind::Empty:
      return "{}";
    case Kind::Points: {
      std::ostringstream os;
      os << "{" << pts_.size() << " points}";
      return os.str();
    }
    case Kind::Axis:
      return "iR";
    case Kind::AxisMinusPoints: {
      std::ostringstream os;
      os << "iR \\ {" << pts_.size() << " points}";
      return os.str();
    }
    case Kind::Union: {
      std::ostringstream os;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << " U ";
        os << parts_[i].to_string();
      }
      return os.str();
    }
  }
  return "?";
}

std::vector<Complex> direct_sum_point(const std::vector<Complex>& s1,
                                      const std::vector<Complex>& s2,
                                      double tol) {
  std::vector<Complex> out = s1;
  for (Complex z : s2) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](Complex p) {
      return std::abs(p - z) <= tol;
    });
    if (!dup) out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

SpectrumResult full_spectrum(const MultipointProblem& p,
                             const ExtensionParams& e,
                             const BranchWindow& window) {
  const NormalityReport rep = validate_extension(p, e);
  if (!rep.extension_exists) {
    throw ValidationError("full_spectrum: parameters do not define a normal extension: " +
                          rep.summary());
  }

  SpectrumResult r;
  r.point = interval_eigenvalues(p, e.W2, window);

  std::vector<Complex> pts;
  pts.reserve(r.point.size());
  for (const auto& ev : r.point) pts.push_back(ev.lambda);
  pts = direct_sum_point(pts, {});  // dedupe + sort
  r.point_set = SpectrumSet::points(pts);

  // The half-line half contributes the axis; interval eigenvalues sitting on
  // the axis are excluded from the continuous part.
  for (Complex z : pts) {
    if (std::abs(z.real()) <= 1e-9) r.excluded_imaginary.push_back(z);
  }
  r.continuous = SpectrumSet::axis_minus(r.excluded_imaginary);
  r.residual = SpectrumSet::empty();

  r.point_provenance =
      "interval component: branch solutions of exp(-lambda tau) = mu over the "
      "monodromy spectrum";
  r.continuous_provenance =
      "half-line component contributes the imaginary axis; enumerated "
      "eigenvalues on the axis are excluded";
  r.residual_provenance = "normal extension: residual spectrum is empty";
  return r;
}

}  // namespace mpnormal
