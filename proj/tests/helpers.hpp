// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "mpnormal/operator_model.hpp"

namespace mpnormal::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(0xC0FFEE);
  return gen;
}

inline Complex random_complex(double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(rng()), d(rng())};
}

inline Vector random_vector(int n, double scale = 1.0) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = random_complex(scale);
  return v;
}

inline Matrix random_matrix(int n, double scale = 1.0) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_complex(scale);
  return m;
}

inline Matrix random_hermitian(int n, double scale = 1.0) {
  const Matrix m = random_matrix(n, scale);
  return ((m + m.adjoint()) / 2.0).eval();
}

inline Matrix random_psd(int n, double scale = 1.0) {
  const Matrix m = random_matrix(n, scale);
  return (m.adjoint() * m).eval();
}

// QR-based Haar-ish random unitary.
inline Matrix random_unitary(int n) {
  const Matrix m = random_matrix(n);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ();
  return q;
}

// Independent matrix-exponential oracle: scaling and squaring on a truncated
// Taylor series; no eigendecomposition involved.
inline Matrix expm_taylor(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  int squarings = 0;
  Matrix scaled = a;
  while (scaled.cwiseAbs().maxCoeff() > 0.25) {
    scaled /= 2.0;
    ++squarings;
  }
  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = (term * scaled / static_cast<double>(k)).eval();
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = (result * result).eval();
  return result;
}

}  // namespace mpnormal::test
