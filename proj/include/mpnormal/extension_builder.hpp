// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "mpnormal/operator_model.hpp"

namespace mpnormal {

// Interval endpoints a1 < a2 < b2 < a3 plus the three coefficient operators
// of the expression (d/dt + A1, d/dt + A2, d/dt + A3).
struct MultipointProblem {
  MultipointProblem(double a1, double a2, double b2, double a3,
                    HermitianOperator A1, HermitianOperator A2,
                    HermitianOperator A3);

  double a1, a2, b2, a3;
  HermitianOperator A1, A2, A3;

  int dim() const { return A1.dim(); }
  double tau() const { return b2 - a2; }
};

// Unitary boundary parameters: u3(a3) = W1 u1(a1), u2(b2) = W2 u2(a2).
struct ExtensionParams {
  UnitaryOperator W1;
  UnitaryOperator W2;
};

struct NormalityReport {
  bool w1_unitary = false;
  double w1_residual = 0.0;
  bool w2_unitary = false;
  double w2_residual = 0.0;
  int kernel_dim_a1 = 0;
  int kernel_dim_a3 = 0;
  bool kernel_compatible = false;  // W1 maps ker(-A1)^{1/2} onto ker A3^{1/2}
  double kernel_residual = 0.0;
  bool extension_exists = false;
  double w2_a2_commutator = 0.0;  // ||W2 A2 - A2 W2||_F, reported only
  std::string maximality_note;
  std::string summary() const;
};

NormalityReport validate_extension(const MultipointProblem& p,
                                   const ExtensionParams& e,
                                   double tol = kKernelTol);

struct BoundaryConditionReport {
  double coupling_w1 = 0.0;    // ||u3(a3) - W1 u1(a1)||
  double coupling_w2 = 0.0;    // ||u2(b2) - W2 u2(a2)||
  double kernel_a1 = 0.0;      // ||(-A1)^{1/2} u1(a1)||
  double kernel_a3 = 0.0;      // ||A3^{1/2} u3(a3)||
  bool pass = false;           // every residual <= 1e-9
};

BoundaryConditionReport check_boundary_conditions(
    const MultipointProblem& p, const ExtensionParams& e, const Vector& u1_a1,
    const Vector& u2_a2, const Vector& u2_b2, const Vector& u3_a3);

// Scalar phases: W1 = [e^{i phi}], W2 = [e^{i psi}].
ExtensionParams scalar_extension(double phi, double psi);

}  // namespace mpnormal
