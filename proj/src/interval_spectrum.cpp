// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/interval_spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mpnormal {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double normalize_arg(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

// One characteristic root mu, in log form, with its eigenvector.
struct Root {
  double log_abs;
  double arg;
  Complex mu;
  Vector eigvec;
  Vector eigvec_modal;
  double conditioning;
  double residual;
};

bool commutes(const MultipointProblem& p, const UnitaryOperator& w2) {
  const double c =
      (w2.entries() * p.A2.entries() - p.A2.entries() * w2.entries()).norm();
  return c <= 1e-12 * std::max(1.0, p.A2.norm());
}

std::vector<Root> roots_commuting(const MultipointProblem& p,
                                  const UnitaryOperator& w2) {
  const EigenSystem& sys = p.A2.eigensystem();
  const int d = p.dim();
  const double tau = p.tau();
  const Matrix wt = sys.eigenvectors.adjoint() * w2.entries() * sys.eigenvectors;

  const double group_tol = 1e-10 * std::max(1.0, p.A2.norm());
  std::vector<Root> roots;
  int start = 0;
  while (start < d) {
    int stop = start + 1;
    while (stop < d &&
           sys.eigenvalues[stop] - sys.eigenvalues[start] <= group_tol) {
      ++stop;
    }
    const int len = stop - start;
    const double alpha = sys.eigenvalues[start];
    const Matrix block = wt.block(start, start, len, len);

    // mu = e^{-alpha tau} nu with nu an eigenvalue of the adjoint W2 block.
    Eigen::ComplexEigenSolver<Matrix> ces(block.adjoint());
    if (ces.info() != Eigen::Success) {
      throw ValidationError("interval_eigenvalues: block eigensolve failed");
    }
    for (int l = 0; l < len; ++l) {
      const Complex nu = ces.eigenvalues()[l];
      Vector x = ces.eigenvectors().col(l);
      x /= x.norm();
      Root r;
      r.log_abs = -alpha * tau + std::log(std::abs(nu));
      r.arg = normalize_arg(std::arg(nu));
      r.mu = r.log_abs < std::log(kExpUnderflowAbs)
                 ? Complex{0.0, 0.0}
                 : std::exp(r.log_abs) * std::polar(1.0, r.arg);
      Vector modal = Vector::Zero(d);
      modal.segment(start, len) = x;
      r.eigvec_modal = modal;
      r.eigvec = sys.eigenvectors * modal;
      r.conditioning = 1.0;  // unitary block, normal
      const double block_res = (block.adjoint() * x - nu * x).norm();
      const double scale =
          -alpha * tau < std::log(kExpUnderflowAbs) ? 0.0 : std::exp(-alpha * tau);
      r.residual = block_res * scale;
      roots.push_back(std::move(r));
    }
    start = stop;
  }
  return roots;
}

std::vector<Root> roots_general(const MultipointProblem& p,
                                const UnitaryOperator& w2) {
  const MonodromyResult mono = monodromy(p, w2);
  const Matrix& m = mono.matrix;
  const int d = p.dim();

  Eigen::ComplexEigenSolver<Matrix> ces(m);
  if (ces.info() != Eigen::Success) {
    throw ValidationError("interval_eigenvalues: monodromy eigensolve failed");
  }
  Eigen::JacobiSVD<Matrix> xsvd(ces.eigenvectors());
  const double cond = xsvd.singularValues()[0] /
                      std::max(xsvd.singularValues()[d - 1], 1e-300);
  const double mnorm = m.norm();

  std::vector<Root> roots;
  for (int j = 0; j < d; ++j) {
    const Complex mu = ces.eigenvalues()[j];
    if (std::abs(mu) < kExpUnderflowAbs) {
      std::ostringstream os;
      os << "interval_eigenvalues: |mu| = " << std::abs(mu)
         << " underflows for mu = (" << mu.real() << ", " << mu.imag() << ")";
      throw PrecisionLossError(os.str());
    }
    Root r;
    r.mu = mu;
    r.log_abs = std::log(std::abs(mu));
    r.arg = normalize_arg(std::arg(mu));
    Vector x = ces.eigenvectors().col(j);
    x /= x.norm();
    r.eigvec = x;
    r.eigvec_modal = p.A2.eigensystem().eigenvectors.adjoint() * x;
    r.conditioning = cond;
    Eigen::JacobiSVD<Matrix> svd(mu * Matrix::Identity(d, d) - m);
    r.residual = svd.singularValues()[d - 1];
    (void)mnorm;
    roots.push_back(std::move(r));
  }
  return roots;
}

std::vector<Root> characteristic_roots(const MultipointProblem& p,
                                       const UnitaryOperator& w2) {
  return commutes(p, w2) ? roots_commuting(p, w2) : roots_general(p, w2);
}

std::pair<int, int> branch_range(const Root& r, const BranchWindow& window,
                                 double tau) {
  if (window.n) return *window.n;
  const double b = window.bound.value_or(10.0 * kTwoPi / tau);
  // |arg + 2 pi n| <= b tau
  const int lo = static_cast<int>(std::ceil((-b * tau - r.arg) / kTwoPi));
  const int hi = static_cast<int>(std::floor((b * tau - r.arg) / kTwoPi));
  return {lo, hi};
}

}  // namespace

BranchWindow BranchWindow::n_range(int n_min, int n_max) {
  if (n_min > n_max) throw ValidationError("BranchWindow: empty n range");
  BranchWindow w;
  w.n = {n_min, n_max};
  return w;
}

BranchWindow BranchWindow::im_bound(double bound) {
  if (!(bound > 0.0)) throw ValidationError("BranchWindow: bound must be positive");
  BranchWindow w;
  w.bound = bound;
  return w;
}

BranchWindow BranchWindow::default_for(double tau) {
  return im_bound(10.0 * kTwoPi / tau);
}

MonodromyResult monodromy(const MultipointProblem& p, const UnitaryOperator& w2) {
  if (w2.dim() != p.dim()) throw DimensionError("monodromy: dim mismatch");
  OperatorExpResult e = operator_exp(p.A2, Complex{0.0, 0.0}, p.tau());
  return {w2.entries().adjoint() * e.matrix, e.precision_loss};
}

std::vector<IntervalEigenvalue> interval_eigenvalues(const MultipointProblem& p,
                                                     const UnitaryOperator& w2,
                                                     const BranchWindow& window) {
  const double tau = p.tau();
  const double denom = p.a2 - p.b2;  // -tau
  const std::vector<Root> roots = characteristic_roots(p, w2);

  std::vector<IntervalEigenvalue> out;
  for (const Root& r : roots) {
    const auto [lo, hi] = branch_range(r, window, tau);
    const double re = r.log_abs / denom;
    const double im_base = r.arg / denom;
    const double im_step = kTwoPi / denom;
    for (int n = lo; n <= hi; ++n) {
      IntervalEigenvalue ev;
      ev.lambda = Complex{re, im_base + static_cast<double>(n) * im_step};
      ev.mu = r.mu;
      ev.log_abs_mu = r.log_abs;
      ev.arg_mu = r.arg;
      ev.branch_n = n;
      ev.eigvec = r.eigvec;
      ev.eigvec_modal = r.eigvec_modal;
      ev.conditioning = r.conditioning;
      ev.residual = r.residual;
      out.push_back(std::move(ev));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const IntervalEigenvalue& a, const IntervalEigenvalue& b) {
              if (a.lambda.real() != b.lambda.real())
                return a.lambda.real() < b.lambda.real();
              return a.lambda.imag() < b.lambda.imag();
            });
  return out;
}

Vector eigenfunction(const MultipointProblem& p, const UnitaryOperator& w2,
                     const IntervalEigenvalue& ev, double t) {
  (void)w2;
  if (t < p.a2 - 1e-12 || t > p.b2 + 1e-12) {
    throw RangeError("eigenfunction: t outside [a2, b2]");
  }
  const EigenSystem& sys = p.A2.eigensystem();
  Vector w = ev.eigvec_modal;
  for (int j = 0; j < w.size(); ++j) {
    if (w[j] == Complex{0.0, 0.0}) continue;
    const Complex e = (ev.lambda - sys.eigenvalues[j]) * (t - p.a2);
    const double scaled = e.real() + std::log(std::abs(w[j]));
    if (scaled > kExpOverflow) {
      throw RangeError("eigenfunction: mode overflows");
    }
    w[j] = scaled < std::log(kExpUnderflowAbs) ? Complex{0.0, 0.0}
                                               : w[j] * std::exp(e);
  }
  return sys.eigenvectors * w;
}

ResolventSolution::ResolventSolution(HermitianOperator a2, Complex lambda,
                                     double anchor, Vector f_star,
                                     TestFunction source)
    : a2_(std::move(a2)), lambda_(lambda), anchor_(anchor),
      f_star_(std::move(f_star)), source_(std::move(source)) {}

Vector ResolventSolution::particular(double t) const {
  const EigenSystem& sys = a2_.eigensystem();
  const double x = t - anchor_;
  Vector acc = Vector::Zero(a2_.dim());
  for (const auto& term : source_.terms()) {
    const Vector h = sys.eigenvectors.adjoint() * term.coeff;
    for (int j = 0; j < a2_.dim(); ++j) {
      const Complex beta = lambda_ - sys.eigenvalues[j];  // homogeneous rate
      const Complex dc = term.rate - beta;
      Complex v;
      if (std::abs(dc) < 1e-12 * (1.0 + std::abs(term.rate) + std::abs(beta))) {
        v = x * std::exp(term.rate * x);
      } else {
        v = (std::exp(term.rate * x) - std::exp(beta * x)) / dc;
      }
      acc[j] += v * h[j];
    }
  }
  return sys.eigenvectors * acc;
}

Vector ResolventSolution::value(double t) const {
  return operator_exp_apply(a2_, lambda_, t - anchor_, f_star_) + particular(t);
}

ResolventSolution resolvent_apply(const MultipointProblem& p,
                                  const UnitaryOperator& w2, Complex lambda,
                                  const TestFunction& f2) {
  if (f2.tag() != IntervalTag::Middle) {
    throw ValidationError("resolvent_apply: source must live on (a2, b2)");
  }
  if (f2.dim() != p.dim()) throw DimensionError("resolvent_apply: dim mismatch");

  const double tau = p.tau();
  const double denom = p.a2 - p.b2;

  // Distance from lambda to the branch lattice of every characteristic root.
  for (const Root& r : characteristic_roots(p, w2)) {
    const double re = r.log_abs / denom;
    const double n_star =
        std::round((lambda.imag() * denom - r.arg) / kTwoPi);
    const Complex nearest{re, (r.arg + kTwoPi * n_star) / denom};
    if (std::abs(lambda - nearest) < 1e-8) {
      std::ostringstream os;
      os << "resolvent_apply: lambda within 1e-8 of the spectrum (branch n = "
         << static_cast<int>(n_star) << ")";
      throw NearSingularError(os.str(), r.mu, static_cast<int>(n_star));
    }
  }

  // Bracket system (I - W2^* e^{-(A2 - lambda) tau}) f* = W2^* P(b2).
  ResolventSolution probe(p.A2, lambda, p.a2, Vector::Zero(p.dim()), f2);
  const Vector g = probe.value(p.b2);  // particular part at b2 (f* = 0)
  const OperatorExpResult prop = operator_exp(p.A2, lambda, tau);
  const Matrix bracket = Matrix::Identity(p.dim(), p.dim()) -
                         w2.entries().adjoint() * prop.matrix;
  Eigen::JacobiSVD<Matrix> svd(bracket, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.singularValues()[p.dim() - 1] <= 1e-12) {
    throw NearSingularError("resolvent_apply: bracket system is singular",
                            Complex{0.0, 0.0}, 0);
  }
  const Vector f_star = svd.solve((w2.entries().adjoint() * g).eval());
  return ResolventSolution(p.A2, lambda, p.a2, f_star, f2);
}

}  // namespace mpnormal
