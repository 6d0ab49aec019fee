// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/operator_model.hpp"

#include <cmath>
#include <sstream>

namespace mpnormal {

std::string to_string(SignConstraint sc) {
  switch (sc) {
    case SignConstraint::NonPositive: return "nonpositive";
    case SignConstraint::NonNegative: return "nonnegative";
    case SignConstraint::None: return "none";
  }
  return "?";
}

HermitianOperator::HermitianOperator(Matrix entries, SignConstraint sc)
    : entries_(std::move(entries)), sc_(sc) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DimensionError("HermitianOperator: matrix must be square and nonempty");
  }
  dim_ = static_cast<int>(entries_.rows());

  const double max_abs = entries_.cwiseAbs().maxCoeff();
  const double herm_tol = kHermTol * std::max(1.0, max_abs);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      const double r = std::abs(entries_(i, j) - std::conj(entries_(j, i)));
      if (r > herm_tol) {
        std::ostringstream os;
        os << "HermitianOperator: entry (" << i << "," << j
           << ") breaks Hermiticity, |A(i,j) - conj(A(j,i))| = " << r
           << " > " << herm_tol;
        throw ValidationError(os.str());
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_);
  if (es.info() != Eigen::Success) {
    throw ValidationError("HermitianOperator: eigendecomposition failed");
  }
  EigenSystem sys{es.eigenvalues(), es.eigenvectors()};
  norm_ = sys.eigenvalues.cwiseAbs().maxCoeff();

  const double ktol = kKernelTol * std::max(1.0, norm_);
  for (int j = 0; j < dim_; ++j) {
    double& alpha = sys.eigenvalues[j];
    if (sc_ == SignConstraint::NonPositive && alpha > 0.0) {
      if (alpha <= ktol) alpha = 0.0;
      else sign_violation_ = std::max(sign_violation_, alpha);
    } else if (sc_ == SignConstraint::NonNegative && alpha < 0.0) {
      if (alpha >= -ktol) alpha = 0.0;
      else sign_violation_ = std::max(sign_violation_, -alpha);
    }
  }
  eigsys_ = std::make_shared<const EigenSystem>(std::move(sys));
}

UnitaryOperator::UnitaryOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
    throw DimensionError("UnitaryOperator: matrix must be square and nonempty");
  }
  dim_ = static_cast<int>(entries_.rows());
  residual_ =
      (entries_.adjoint() * entries_ - Matrix::Identity(dim_, dim_)).norm();
  if (residual_ > 1e-12 * dim_) {
    std::ostringstream os;
    os << "UnitaryOperator: ||W*W - I||_F = " << residual_ << " exceeds "
       << 1e-12 * dim_;
    throw ValidationError(os.str());
  }
}

const EigenSystem& eig_hermitian(const HermitianOperator& a) {
  return a.eigensystem();
}

HermitianOperator psd_sqrt(const HermitianOperator& a, bool negate, double tol) {
  const EigenSystem& sys = a.eigensystem();
  const double ktol = tol * std::max(1.0, a.norm());
  Eigen::VectorXd vals(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    double alpha = negate ? -sys.eigenvalues[j] : sys.eigenvalues[j];
    if (alpha < -ktol) {
      std::ostringstream os;
      os << "psd_sqrt: eigenvalue " << alpha << " of "
         << (negate ? "-A" : "A") << " is negative beyond tolerance " << ktol;
      throw ValidationError(os.str());
    }
    vals[j] = std::sqrt(std::max(alpha, 0.0));
  }
  Matrix s = sys.eigenvectors * vals.asDiagonal() *
             sys.eigenvectors.adjoint().eval();
  // re-symmetrize roundoff
  s = ((s + s.adjoint()) / 2.0).eval();
  return HermitianOperator(std::move(s), SignConstraint::NonNegative);
}

Matrix kernel_basis(const HermitianOperator& a, double tol) {
  const EigenSystem& sys = a.eigensystem();
  const double cut = tol * std::max(1.0, a.norm());
  int count = 0;
  for (int j = 0; j < a.dim(); ++j) {
    if (std::abs(sys.eigenvalues[j]) <= cut) ++count;
  }
  Matrix basis(a.dim(), count);
  int k = 0;
  for (int j = 0; j < a.dim(); ++j) {
    if (std::abs(sys.eigenvalues[j]) <= cut) basis.col(k++) = sys.eigenvectors.col(j);
  }
  return basis;
}

OperatorExpResult operator_exp(const HermitianOperator& a, Complex lambda,
                               double tau) {
  if (!std::isfinite(tau)) throw RangeError("operator_exp: tau must be finite");
  const EigenSystem& sys = a.eigensystem();
  Vector diag(a.dim());
  bool loss = false;
  for (int j = 0; j < a.dim(); ++j) {
    const Complex e = (lambda - sys.eigenvalues[j]) * tau;
    if (e.real() > kExpOverflow) {
      std::ostringstream os;
      os << "operator_exp: exponent Re((lambda - alpha_" << j << ") tau) = "
         << e.real() << " overflows";
      throw RangeError(os.str());
    }
    const Complex value = std::exp(e);
    if (std::abs(value) < kExpUnderflowAbs) loss = true;
    diag[j] = value;
  }
  Matrix m = sys.eigenvectors * diag.asDiagonal() *
             sys.eigenvectors.adjoint().eval();
  return {std::move(m), loss};
}

Vector operator_exp_apply(const HermitianOperator& a, Complex lambda,
                          double tau, const Vector& v) {
  if (v.size() != a.dim()) {
    throw DimensionError("operator_exp_apply: vector dimension mismatch");
  }
  const EigenSystem& sys = a.eigensystem();
  Vector w = sys.eigenvectors.adjoint() * v;
  for (int j = 0; j < a.dim(); ++j) {
    const double coeff = std::abs(w[j]);
    if (coeff == 0.0) continue;
    const Complex e = (lambda - sys.eigenvalues[j]) * tau;
    const double scaled = e.real() + std::log(coeff);
    if (scaled > kExpOverflow) {
      std::ostringstream os;
      os << "operator_exp_apply: mode " << j << " overflows, exponent "
         << scaled;
      throw RangeError(os.str());
    }
    if (scaled < std::log(kExpUnderflowAbs)) {
      w[j] = 0.0;
      continue;
    }
    w[j] *= std::exp(e);
  }
  return sys.eigenvectors * w;
}

Complex plus_inner_product(const HermitianOperator& a, const Vector& f,
                           const Vector& g) {
  if (f.size() != a.dim() || g.size() != a.dim()) {
    throw DimensionError("plus_inner_product: dimension mismatch");
  }
  const Vector af = a.entries() * f;
  const Vector ag = a.entries() * g;
  return inner(af, ag) + inner(f, g);
}

namespace {
double hermiticity_residual(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}
}  // namespace

CoefficientReport validate_coefficients(const HermitianOperator& a1,
                                        const HermitianOperator& a2,
                                        const HermitianOperator& a3,
                                        double tol) {
  if (a1.dim() != a2.dim() || a1.dim() != a3.dim()) {
    throw DimensionError("validate_coefficients: operators must share dim");
  }
  CoefficientReport r;
  r.hermiticity_residual = {hermiticity_residual(a1.entries()),
                            hermiticity_residual(a2.entries()),
                            hermiticity_residual(a3.entries())};
  r.sign_violation = {a1.sign_violation(), a2.sign_violation(),
                      a3.sign_violation()};
  // ker (-A1)^{1/2} = ker A1 and ker A3^{1/2} = ker A3 in finite dimension.
  r.kernel_dim_a1 = static_cast<int>(kernel_basis(a1, tol).cols());
  r.kernel_dim_a3 = static_cast<int>(kernel_basis(a3, tol).cols());
  r.pass = r.sign_violation[0] == 0.0 && r.sign_violation[1] == 0.0 &&
           r.sign_violation[2] == 0.0;
  return r;
}

std::string CoefficientReport::summary() const {
  std::ostringstream os;
  os << (pass ? "pass" : "fail")
     << "; hermiticity residuals (" << hermiticity_residual[0] << ", "
     << hermiticity_residual[1] << ", " << hermiticity_residual[2]
     << "); sign violations (" << sign_violation[0] << ", "
     << sign_violation[1] << ", " << sign_violation[2]
     << "); kernel dims (" << kernel_dim_a1 << ", " << kernel_dim_a3 << ")";
  return os.str();
}

}  // namespace mpnormal
