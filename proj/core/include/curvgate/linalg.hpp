#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "curvgate/dual.hpp"

namespace curvgate {

/// Dense square matrix with runtime dimension. Small sizes only (the
/// largest matrix in this project is the 21x21 bivector operator of a
/// 7-dimensional chart).
template <class T>
class Mat {
public:
  Mat() : n_(0) {}
  explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  int dim() const { return n_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1.0);
    return m;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

private:
  int n_;
  std::vector<T> a_;
};

/// Solves A x = b by Gaussian elimination with partial pivoting. Works for
/// double and for dual numbers (pivot choice uses the value part).
template <class T>
std::vector<T> solve_linear(Mat<T> a, std::vector<T> b) {
  const int n = a.dim();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_linear: size mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(value_of(a(col, col)));
    for (int r = col + 1; r < n; ++r) {
      const double v = std::abs(value_of(a(r, col)));
      if (v > best) { best = v; piv = r; }
    }
    if (best == 0.0) throw std::domain_error("solve_linear: singular matrix");
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a(col, c), a(piv, c));
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const T f = a(r, col) / a(col, col);
      for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      b[r] -= f * b[col];
    }
  }
  std::vector<T> x(b.size());
  for (int r = n - 1; r >= 0; --r) {
    T s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a(r, c) * x[c];
    x[r] = s / a(r, r);
  }
  return x;
}

/// Inverse via column-wise solves.
template <class T>
Mat<T> inverse(const Mat<T>& a) {
  const int n = a.dim();
  Mat<T> inv(n);
  for (int j = 0; j < n; ++j) {
    std::vector<T> e(n);
    e[j] = T(1.0);
    auto col = solve_linear(a, std::move(e));
    for (int i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

double frobenius_norm(const Mat<double>& a);
double max_abs(const Mat<double>& a);

/// Largest relative asymmetry |a_ij - a_ji| / max|a|. Zero matrix gives 0.
double symmetry_defect(const Mat<double>& a);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Input must be symmetric to 1e-10 relative; iteration runs until the
/// off-diagonal norm drops below tol * max(1, ||A||_F) and throws after a
/// bounded number of sweeps (malformed input).
std::vector<double> sym_eigenvalues(Mat<double> a, double tol = 1e-12);

/// Ratio of extreme absolute eigenvalues of a symmetric matrix.
double sym_condition_number(const Mat<double>& a);

/// Rows of the returned matrix are a g-orthonormal frame obtained by
/// Gram-Schmidt on the coordinate basis: E g E^T = Id.
Mat<double> gram_schmidt_frame(const Mat<double>& g);

}  // namespace curvgate
