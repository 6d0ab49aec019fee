// SPDX-License-Identifier: Apache-2.0

#include "mpnormal/validation_oracle.hpp"

#include <lapacke.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mpnormal {

namespace {

constexpr int kGaussPoints = 32;
constexpr int kMaxDenseDim = 4096;

struct GaussRule {
  std::array<double, kGaussPoints> nodes;    // on (-1, 1)
  std::array<double, kGaussPoints> weights;
};

// Newton iteration on the Legendre recurrence.
GaussRule make_gauss_rule() {
  GaussRule rule;
  const int n = kGaussPoints;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& gauss_rule() {
  static const GaussRule rule = make_gauss_rule();
  return rule;
}

int panel_count(double t0, double t1) {
  return std::max(1, static_cast<int>(std::ceil(t1 - t0)));
}

}  // namespace

Matrix fd_matrix(const MultipointProblem& p, const UnitaryOperator& w2, int m,
                 FDScheme scheme) {
  if (m < 16) throw ValidationError("fd_matrix: need m >= 16");
  const int d = p.dim();
  if (static_cast<long long>(m) * d > kMaxDenseDim) {
    std::ostringstream os;
    os << "fd_matrix: dense size m*dim = " << m * d << " exceeds "
       << kMaxDenseDim;
    throw ValidationError(os.str());
  }
  const double h = p.tau() / m;
  const int n = m * d;
  Matrix l = Matrix::Zero(n, n);
  const Matrix& a2 = p.A2.entries();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix& w = w2.entries();

  auto block = [&](int r, int c) { return l.block(r * d, c * d, d, d); };

  if (scheme == FDScheme::Upwind) {
    for (int j = 0; j < m; ++j) {
      block(j, j) = a2 - id / h;
      if (j + 1 < m) {
        block(j, j + 1) += id / h;
      } else {
        block(j, 0) += w / h;  // u_m = W2 u_0
      }
    }
  } else {
    // Quasi-periodic extension u_{j+m} = W2 u_j gives u_{-1} = W2^* u_{m-1}.
    for (int j = 0; j < m; ++j) {
      block(j, j) = a2;
      if (j + 1 < m) block(j, j + 1) += id / (2.0 * h);
      else block(j, 0) += w / (2.0 * h);
      if (j - 1 >= 0) block(j, j - 1) -= id / (2.0 * h);
      else block(j, m - 1) -= w.adjoint() / (2.0 * h);
    }
  }
  return l;
}

std::vector<Complex> dense_complex_eigenvalues(const Matrix& m) {
  const int n = static_cast<int>(m.rows());
  Matrix work = m;  // zgeev overwrites
  std::vector<Complex> vals(n);
  const int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, 'N', 'N', n,
      reinterpret_cast<lapack_complex_double*>(work.data()), n,
      reinterpret_cast<lapack_complex_double*>(vals.data()), nullptr, 1,
      nullptr, 1);
  if (info != 0) {
    std::ostringstream os;
    os << "dense_complex_eigenvalues: zgeev failed with info = " << info;
    throw ValidationError(os.str());
  }
  return vals;
}

namespace {

Complex nearest(const std::vector<Complex>& set, Complex target) {
  Complex best = set.front();
  double bd = std::numeric_limits<double>::infinity();
  for (Complex z : set) {
    const double dist = std::abs(z - target);
    if (dist < bd) {
      bd = dist;
      best = z;
    }
  }
  return best;
}

double richardson_order(const MultipointProblem& p, const UnitaryOperator& w2,
                        int m, FDScheme scheme,
                        const std::vector<Complex>& fine) {
  if (m % 4 != 0 || m / 4 < 16) return std::numeric_limits<double>::quiet_NaN();
  const auto mid = dense_complex_eigenvalues(fd_matrix(p, w2, m / 2, scheme));
  const auto coarse = dense_complex_eigenvalues(fd_matrix(p, w2, m / 4, scheme));

  // Track a genuinely discretization-limited mode: the smallest eigenvalue in
  // the first nonzero branch band.
  const double tau = p.tau();
  Complex probe{0.0, 0.0};
  double best = std::numeric_limits<double>::infinity();
  for (Complex z : fine) {
    const double im = std::abs(z.imag());
    if (im < std::numbers::pi / tau || im > 3.0 * std::numbers::pi / tau)
      continue;
    if (std::abs(z) < best) {
      best = std::abs(z);
      probe = z;
    }
  }
  if (!std::isfinite(best)) return std::numeric_limits<double>::quiet_NaN();

  const Complex z_mid = nearest(mid, probe);
  const Complex z_coarse = nearest(coarse, z_mid);
  const double d1 = std::abs(z_coarse - z_mid);
  const double d2 = std::abs(z_mid - probe);
  if (d2 < 1e-12 || d1 < 1e-12) return std::numeric_limits<double>::quiet_NaN();
  return std::log2(d1 / d2);
}

}  // namespace

FDEigenResult fd_interval_eigenvalues(const MultipointProblem& p,
                                      const UnitaryOperator& w2, int m,
                                      FDScheme scheme, bool estimate_order) {
  FDEigenResult r;
  r.grid_size = m;
  r.eigenvalues = dense_complex_eigenvalues(fd_matrix(p, w2, m, scheme));
  r.order_estimate = estimate_order
                         ? richardson_order(p, w2, m, scheme, r.eigenvalues)
                         : std::numeric_limits<double>::quiet_NaN();
  return r;
}

double normality_probe(const MultipointProblem& p, const UnitaryOperator& w2,
                       int m) {
  const Matrix l = fd_matrix(p, w2, m, FDScheme::Upwind);
  const Matrix c = l * l.adjoint() - l.adjoint() * l;
  return c.norm() / (l.norm() * l.norm());
}

std::pair<MultipointProblem, ExtensionParams> build_example35(int n, double phi,
                                                              double psi) {
  if (n < 1) throw ValidationError("build_example35: need N >= 1");
  Eigen::VectorXd modes(n);
  for (int k = 0; k < n; ++k) {
    modes[k] = std::pow(k * std::numbers::pi, 2);
  }
  Matrix a1 = (-modes).cast<Complex>().asDiagonal();
  Matrix a2 = (modes.array() + 1.0).matrix().cast<Complex>().asDiagonal();
  Matrix a3 = modes.cast<Complex>().asDiagonal();
  MultipointProblem p(-1.0, -0.5, 0.5, 1.0,
                      HermitianOperator(std::move(a1), SignConstraint::NonPositive),
                      HermitianOperator(std::move(a2), SignConstraint::NonNegative),
                      HermitianOperator(std::move(a3), SignConstraint::NonNegative));
  Matrix w1 = std::polar(1.0, phi) * Matrix::Identity(n, n);
  Matrix w2 = std::polar(1.0, psi) * Matrix::Identity(n, n);
  ExtensionParams e{UnitaryOperator(std::move(w1)), UnitaryOperator(std::move(w2))};
  return {std::move(p), std::move(e)};
}

double quadrature(const std::function<double(double)>& f, double t0, double t1,
                  par::Mode mode) {
  const GaussRule& rule = gauss_rule();
  const int panels = panel_count(t0, t1);
  const double width = (t1 - t0) / panels;
  std::vector<double> partial(panels, 0.0);
  par::for_each_index(
      panels,
      [&](std::size_t pi) {
        const double lo = t0 + pi * width;
        double acc = 0.0;
        for (int q = 0; q < kGaussPoints; ++q) {
          const double t = lo + width * (rule.nodes[q] + 1.0) / 2.0;
          acc += rule.weights[q] * f(t);
        }
        partial[pi] = acc * width / 2.0;
      },
      mode);
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

double quadrature_l2(const TestFunction& f, double t0, double t1,
                     par::Mode mode) {
  return quadrature([&](double t) { return f.value(t).squaredNorm(); }, t0, t1,
                    mode);
}

double max_relative_match_error(const std::vector<Complex>& analytic,
                                const std::vector<Complex>& fd) {
  double worst = 0.0;
  for (Complex z : analytic) {
    const Complex match = nearest(fd, z);
    worst = std::max(worst, std::abs(z - match) / std::max(1e-30, std::abs(z)));
  }
  return worst;
}

}  // namespace mpnormal
