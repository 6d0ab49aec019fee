// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/extension_builder.hpp"

#include <cmath>
#include <sstream>

namespace mpnormal {

MultipointProblem::MultipointProblem(double a1_, double a2_, double b2_,
                                     double a3_, HermitianOperator A1_,
                                     HermitianOperator A2_,
                                     HermitianOperator A3_)
    : a1(a1_), a2(a2_), b2(b2_), a3(a3_),
      A1(std::move(A1_)), A2(std::move(A2_)), A3(std::move(A3_)) {
  if (!(a1 < a2 && a2 < b2 && b2 < a3)) {
    throw ValidationError("MultipointProblem: endpoints must satisfy a1 < a2 < b2 < a3");
  }
  if (A1.dim() != A2.dim() || A1.dim() != A3.dim()) {
    throw DimensionError("MultipointProblem: coefficient operators must share dim");
  }
  if (A1.sign_constraint() != SignConstraint::NonPositive ||
      A2.sign_constraint() != SignConstraint::NonNegative ||
      A3.sign_constraint() != SignConstraint::NonNegative) {
    throw ValidationError(
        "MultipointProblem: expected sign constraints (nonpositive, nonnegative, nonnegative)");
  }
  const CoefficientReport rep = validate_coefficients(A1, A2, A3);
  if (!rep.pass) {
    throw ValidationError("MultipointProblem: coefficient validation failed: " +
                          rep.summary());
  }
}

NormalityReport validate_extension(const MultipointProblem& p,
                                   const ExtensionParams& e, double tol) {
  if (e.W1.dim() != p.dim() || e.W2.dim() != p.dim()) {
    throw DimensionError("validate_extension: unitary dims do not match problem");
  }
  NormalityReport r;
  r.w1_residual = e.W1.unitarity_residual();
  r.w2_residual = e.W2.unitarity_residual();
  r.w1_unitary = r.w1_residual <= 1e-12 * p.dim();
  r.w2_unitary = r.w2_residual <= 1e-12 * p.dim();

  const Matrix k1 = kernel_basis(p.A1, tol);
  const Matrix k3 = kernel_basis(p.A3, tol);
  r.kernel_dim_a1 = static_cast<int>(k1.cols());
  r.kernel_dim_a3 = static_cast<int>(k3.cols());

  r.w2_a2_commutator =
      (e.W2.entries() * p.A2.entries() - p.A2.entries() * e.W2.entries()).norm();

  if (r.kernel_dim_a1 == 0 || r.kernel_dim_a3 == 0) {
    r.maximality_note =
        "a coefficient on a half-line is injective; the minimal operator is "
        "maximally formally normal and admits no normal extension";
    return r;
  }

  // W1 restricted to ker(-A1)^{1/2} must land in span(ker A3^{1/2}).
  double worst = 0.0;
  for (int j = 0; j < k1.cols(); ++j) {
    const Vector w = e.W1.entries() * k1.col(j);
    const Vector res = w - k3 * (k3.adjoint() * w).eval();
    worst = std::max(worst, res.norm());
  }
  r.kernel_residual = worst;
  r.kernel_compatible = worst <= 1e-10;
  r.extension_exists = r.w1_unitary && r.w2_unitary && r.kernel_compatible &&
                       r.kernel_dim_a1 == r.kernel_dim_a3 &&
                       r.kernel_dim_a1 > 0;
  return r;
}

std::string NormalityReport::summary() const {
  std::ostringstream os;
  os << "extension_exists=" << (extension_exists ? "true" : "false")
     << "; kernel dims (" << kernel_dim_a1 << ", " << kernel_dim_a3
     << "); kernel residual " << kernel_residual << "; unitarity residuals ("
     << w1_residual << ", " << w2_residual << "); ||[W2,A2]||_F = "
     << w2_a2_commutator;
  if (!maximality_note.empty()) os << "; " << maximality_note;
  return os.str();
}

BoundaryConditionReport check_boundary_conditions(
    const MultipointProblem& p, const ExtensionParams& e, const Vector& u1_a1,
    const Vector& u2_a2, const Vector& u2_b2, const Vector& u3_a3) {
  if (u1_a1.size() != p.dim() || u2_a2.size() != p.dim() ||
      u2_b2.size() != p.dim() || u3_a3.size() != p.dim()) {
    throw DimensionError("check_boundary_conditions: vector dim mismatch");
  }
  BoundaryConditionReport r;
  r.coupling_w1 = (u3_a3 - e.W1.entries() * u1_a1).norm();
  r.coupling_w2 = (u2_b2 - e.W2.entries() * u2_a2).norm();
  const HermitianOperator s1 = psd_sqrt(p.A1, /*negate=*/true);
  const HermitianOperator s3 = psd_sqrt(p.A3, /*negate=*/false);
  r.kernel_a1 = (s1.entries() * u1_a1).norm();
  r.kernel_a3 = (s3.entries() * u3_a3).norm();
  r.pass = r.coupling_w1 <= 1e-9 && r.coupling_w2 <= 1e-9 &&
           r.kernel_a1 <= 1e-9 && r.kernel_a3 <= 1e-9;
  return r;
}

ExtensionParams scalar_extension(double phi, double psi) {
  Matrix w1(1, 1), w2(1, 1);
  w1(0, 0) = std::polar(1.0, phi);
  w2(0, 0) = std::polar(1.0, psi);
  return {UnitaryOperator(std::move(w1)), UnitaryOperator(std::move(w2))};
}

}  // namespace mpnormal
