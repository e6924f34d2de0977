#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap::linalg {

/// Square dense matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, T(0)) {}

  int size() const { return n_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<T> data_;
};

template <class T>
struct Cholesky {
  Matrix<T> lower;
  /// min / max of the diagonal of the factor; tracks how close the matrix is to singular.
  double pivot_ratio = 0.0;
};

/// A = L L^T. Throws SolverError on a non-positive pivot.
template <class T>
Cholesky<T> cholesky(const Matrix<T>& a) {
  using std::sqrt;
  const int n = a.size();
  Cholesky<T> out{Matrix<T>(n), 0.0};
  Matrix<T>& l = out.lower;
  T lo = 0, hi = 0;
  for (int j = 0; j < n; ++j) {
    T diag = a(j, j);
    for (int k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0)) {
      const double ratio = (j == 0 || hi == 0) ? 0.0 : static_cast<double>(lo / hi);
      throw SolverError("Cholesky: matrix is not positive definite at pivot " + std::to_string(j) +
                            " (pivot ratio so far " + std::to_string(ratio) + "); try a smaller basis",
                        ratio);
    }
    l(j, j) = sqrt(diag);
    if (j == 0 || l(j, j) < lo) lo = l(j, j);
    if (j == 0 || l(j, j) > hi) hi = l(j, j);
    for (int i = j + 1; i < n; ++i) {
      T s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  out.pivot_ratio = static_cast<double>(lo / hi);
  return out;
}

/// L^{-1} A L^{-T} for lower-triangular L.
template <class T>
Matrix<T> congruence_by_inverse(const Matrix<T>& a, const Matrix<T>& l) {
  const int n = a.size();
  // Y = L^{-1} A, column by column (forward substitution).
  Matrix<T> y(n);
  for (int c = 0; c < n; ++c) {
    for (int i = 0; i < n; ++i) {
      T s = a(i, c);
      for (int k = 0; k < i; ++k) s -= l(i, k) * y(k, c);
      y(i, c) = s / l(i, i);
    }
  }
  // B = Y L^{-T}, i.e. B^T = L^{-1} Y^T, row by row.
  Matrix<T> b(n);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < n; ++j) {
      T s = y(r, j);
      for (int k = 0; k < j; ++k) s -= l(j, k) * b(r, k);
      b(r, j) = s / l(j, j);
    }
  }
  // Symmetrise away rounding.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const T m = (b(i, j) + b(j, i)) / T(2);
      b(i, j) = m;
      b(j, i) = m;
    }
  return b;
}

struct JacobiInfo {
  int sweeps = 0;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps until the off-diagonal Frobenius norm is at most
/// rel_tol * min_i |a_ii|, which by Weyl's inequality bounds the absolute
/// error of every eigenvalue by rel_tol times the smallest diagonal magnitude.
template <class T>
std::vector<T> jacobi_eigenvalues(Matrix<T> a, double rel_tol, JacobiInfo* info = nullptr, int max_sweeps = 100) {
  using std::abs;
  using std::sqrt;
  const int n = a.size();
  auto off_norm = [&] {
    T s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return sqrt(s);
  };
  auto min_diag = [&] {
    T m = abs(a(0, 0));
    for (int i = 1; i < n; ++i)
      if (abs(a(i, i)) < m) m = abs(a(i, i));
    return m;
  };
  int sweep = 0;
  for (; n > 1 && off_norm() > T(rel_tol) * min_diag(); ++sweep) {
    if (sweep >= max_sweeps) throw SolverError("Jacobi: no convergence after " + std::to_string(max_sweeps) + " sweeps", 0.0);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        if (apq == 0) continue;
        const T theta = (a(q, q) - a(p, p)) / (T(2) * apq);
        T t = T(1) / (abs(theta) + sqrt(theta * theta + T(1)));
        if (theta < 0) t = -t;
        const T c = T(1) / sqrt(t * t + T(1));
        const T s = t * c;
        const T tau = s / (T(1) + c);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0;
        a(q, p) = 0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const T arp = a(r, p);
          const T arq = a(r, q);
          a(r, p) = arp - s * (arq + tau * arp);
          a(r, q) = arq + s * (arp - tau * arq);
          a(p, r) = a(r, p);
          a(q, r) = a(r, q);
        }
      }
    }
  }
  if (info) info->sweeps = sweep;
  std::vector<T> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  return ev;
}

}  // namespace fraclap::linalg
