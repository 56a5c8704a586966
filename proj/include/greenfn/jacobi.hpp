#pragma once

// Cyclic Jacobi eigensolver for dense symmetric matrices. Intended for the
// oracle path only, so simplicity beats asymptotics; fine up to n ~ 2500.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "greenfn/matrix.hpp"

namespace greenfn {

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // column j pairs with values[j]
  int sweeps = 0;
};

namespace detail {

inline double off_diagonal_frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace detail

// Sweeps rotate every (p,q) pair until the off-diagonal Frobenius norm drops
// below 1e-14 relative to the input norm; gives up after max_sweeps.
inline SymmetricEigen jacobi_eigensystem(Matrix a, int max_sweeps = 100) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("jacobi_eigensystem requires a square matrix");
  if (!is_symmetric(a, 1e-12))
    throw std::invalid_argument("jacobi_eigensystem requires a symmetric matrix");
  int n = a.rows();
  Matrix v = Matrix::identity(n);
  double threshold = 1e-14 * std::max(1.0, frobenius(a));
  int sweeps = 0;
  while (detail::off_diagonal_frobenius(a) > threshold) {
    if (sweeps++ >= max_sweeps)
      throw std::runtime_error("jacobi_eigensystem did not converge");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = a(p, q);
        if (apq == 0.0) continue;
        double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  SymmetricEigen out;
  out.sweeps = sweeps;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return diag[x] < diag[y]; });
  out.vectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[j] = diag[order[j]];
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace greenfn
