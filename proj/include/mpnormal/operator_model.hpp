// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <memory>
#include <string>

#include "mpnormal/errors.hpp"

namespace mpnormal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Inner product convention: linear in the first argument, conjugate-linear in
// the second (Eigen's dot() conjugates its *first* argument).
inline Complex inner(const Vector& f, const Vector& g) { return g.dot(f); }

inline constexpr double kHermTol = 1e-12;
inline constexpr double kKernelTol = 1e-10;
inline constexpr double kExpOverflow = 700.0;
inline constexpr double kExpUnderflowAbs = 1e-300;

enum class SignConstraint { NonPositive, NonNegative, None };

std::string to_string(SignConstraint sc);

struct EigenSystem {
  Eigen::VectorXd eigenvalues;  // ascending, clipped to the sign constraint
  Matrix eigenvectors;          // orthonormal columns
};

// Finite self-adjoint coefficient operator with a declared sign constraint.
// The eigendecomposition is computed once at construction and shared by all
// functional-calculus operations so sqrt/exp/kernel paths cannot diverge.
class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix entries,
                             SignConstraint sc = SignConstraint::None);

  int dim() const { return dim_; }
  const Matrix& entries() const { return entries_; }
  SignConstraint sign_constraint() const { return sc_; }

  const EigenSystem& eigensystem() const { return *eigsys_; }

  // Spectral norm (largest |eigenvalue| before clipping).
  double norm() const { return norm_; }

  // Worst distance an eigenvalue lies beyond the declared sign constraint;
  // 0 when the constraint holds (or none is declared).
  double sign_violation() const { return sign_violation_; }

 private:
  Matrix entries_;
  SignConstraint sc_;
  int dim_;
  double norm_ = 0.0;
  double sign_violation_ = 0.0;
  std::shared_ptr<const EigenSystem> eigsys_;
};

class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix entries);

  int dim() const { return dim_; }
  const Matrix& entries() const { return entries_; }
  double unitarity_residual() const { return residual_; }

 private:
  Matrix entries_;
  int dim_;
  double residual_;
};

const EigenSystem& eig_hermitian(const HermitianOperator& a);

// (-A)^{1/2} when `negate` is set, otherwise A^{1/2}. Eigenvalues of the
// (possibly negated) operator must be >= -tol*max(1,||A||); small negatives
// are clipped to zero, genuine ones raise ValidationError.
HermitianOperator psd_sqrt(const HermitianOperator& a, bool negate,
                           double tol = kKernelTol);

// Orthonormal eigenvectors with |eigenvalue| <= tol*max(1,||A||).
Matrix kernel_basis(const HermitianOperator& a, double tol = kKernelTol);

struct OperatorExpResult {
  Matrix matrix;
  bool precision_loss = false;  // some mode underflowed below 1e-300
};

// e^{-(A - lambda) tau} = V diag(e^{(lambda - alpha_j) tau}) V^*.
OperatorExpResult operator_exp(const HermitianOperator& a, Complex lambda,
                               double tau);

// e^{-(A - lambda) tau} v, guarded per spectral component: a mode whose
// coefficient in v vanishes contributes nothing even when its exponent alone
// would overflow.
Vector operator_exp_apply(const HermitianOperator& a, Complex lambda,
                          double tau, const Vector& v);

// (A f, A g) + (f, g).
Complex plus_inner_product(const HermitianOperator& a, const Vector& f,
                           const Vector& g);

struct CoefficientReport {
  std::array<double, 3> hermiticity_residual{};
  std::array<double, 3> sign_violation{};
  int kernel_dim_a1 = 0;  // dim ker (-A1)^{1/2}
  int kernel_dim_a3 = 0;  // dim ker A3^{1/2}
  bool pass = false;
  std::string summary() const;
};

CoefficientReport validate_coefficients(const HermitianOperator& a1,
                                        const HermitianOperator& a2,
                                        const HermitianOperator& a3,
                                        double tol = kKernelTol);

}  // namespace mpnormal
