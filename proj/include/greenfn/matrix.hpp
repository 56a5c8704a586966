#pragma once

// Dense row-major matrix with just enough linear algebra for desk-scale
// oracle work: products, norms, and a partial-pivot LU for solves/inverses.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace greenfn {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              fill) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("matrix dimensions must be nonnegative");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  double operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * cols_; }
  const double* row(int r) const {
    return data_.data() + static_cast<std::size_t>(r) * cols_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    double* oi = out.row(i);
    const double* ai = a.row(i);
    for (int k = 0; k < a.cols(); ++k) {
      double aik = ai[k];
      if (aik == 0.0) continue;
      const double* bk = b.row(k);
      for (int j = 0; j < b.cols(); ++j) oi[j] += aik * bk[j];
    }
  }
  return out;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline double max_abs(const Matrix& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return max_abs(a - b);
}

inline double frobenius(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

inline bool is_symmetric(const Matrix& a, double tol = 1e-12) {
  if (a.rows() != a.cols()) return false;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) return false;
  return true;
}

// In-place Doolittle LU with partial pivoting. Row i of the input ends up
// holding row perm[i] of L\U.
struct LuFactor {
  Matrix lu;
  std::vector<int> perm;
};

inline LuFactor lu_factor(Matrix a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("lu_factor requires a square matrix");
  int n = a.rows();
  LuFactor f{std::move(a), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) f.perm[i] = i;
  double scale = max_abs(f.lu);
  if (scale == 0.0) scale = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = std::abs(f.lu(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = std::abs(f.lu(i, k));
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best <= 1e-13 * scale)
      throw std::runtime_error("lu_factor: matrix is singular to working precision");
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(pivot, j));
      std::swap(f.perm[k], f.perm[pivot]);
    }
    const double inv = 1.0 / f.lu(k, k);
    const double* rk = f.lu.row(k);
    for (int i = k + 1; i < n; ++i) {
      double* ri = f.lu.row(i);
      double l = ri[k] * inv;
      ri[k] = l;
      if (l == 0.0) continue;
      for (int j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
    }
  }
  return f;
}

inline std::vector<double> lu_solve(const LuFactor& f, const std::vector<double>& b) {
  int n = f.lu.rows();
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("lu_solve right-hand side has wrong length");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    const double* ri = f.lu.row(i);
    for (int j = 0; j < i; ++j) s -= ri[j] * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    const double* ri = f.lu.row(i);
    for (int j = i + 1; j < n; ++j) s -= ri[j] * x[j];
    x[i] = s / ri[i];
  }
  return x;
}

inline Matrix inverse(const Matrix& a) {
  LuFactor f = lu_factor(a);
  int n = a.rows();
  Matrix out(n, n);
  std::vector<double> e(n, 0.0);
  for (int c = 0; c < n; ++c) {
    e[c] = 1.0;
    std::vector<double> x = lu_solve(f, e);
    for (int r = 0; r < n; ++r) out(r, c) = x[r];
    e[c] = 0.0;
  }
  return out;
}

}  // namespace greenfn
