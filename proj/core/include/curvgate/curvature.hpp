#pragma once

#include <span>
#include <vector>

#include "curvgate/chart.hpp"
#include "curvgate/linalg.hpp"

namespace curvgate {

/// Rank-3 array G[k][i][j], flat storage.
template <class T>
class Rank3 {
public:
  Rank3() : n_(0) {}
  explicit Rank3(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n) {}
  int dim() const { return n_; }
  T& operator()(int k, int i, int j) { return a_[(static_cast<std::size_t>(k) * n_ + i) * n_ + j]; }
  const T& operator()(int k, int i, int j) const {
    return a_[(static_cast<std::size_t>(k) * n_ + i) * n_ + j];
  }

private:
  int n_;
  std::vector<T> a_;
};

/// Rank-4 array R[i][j][k][l], flat storage.
class Rank4 {
public:
  Rank4() : n_(0) {}
  explicit Rank4(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n) {}
  int dim() const { return n_; }
  double& operator()(int i, int j, int k, int l) {
    return a_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  double operator()(int i, int j, int k, int l) const {
    return a_[((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  double max_abs() const;

private:
  int n_;
  std::vector<double> a_;
};

enum class Frame { Coordinate, Orthonormal };

/// Riemann tensor with all indices lowered. Sign convention: on the unit
/// round sphere, R(i,j,i,j) = +1 in an orthonormal frame, so sectional
/// curvature is R(u,v,u,v) divided by the Gram determinant of (u,v).
struct RiemannTensor {
  ChartPoint point;
  Frame frame = Frame::Coordinate;
  Rank4 components;

  int dim() const { return components.dim(); }
};

struct CurvatureOperatorMatrix {
  ChartPoint point;
  /// Symmetric N x N matrix, N = m(m-1)/2, in the lexicographic basis
  /// e_i ^ e_j (i<j) of an orthonormal frame. Unit round sphere: identity.
  Mat<double> matrix;
  std::vector<std::pair<int, int>> basis;
};

/// Levi-Civita connection coefficients Gamma^k_{ij} at p.
Rank3<double> christoffel(const MetricField& metric, const ChartPoint& p);

/// Lowered-index Riemann tensor at p in the coordinate frame. Both metric
/// derivatives are taken with (nested) dual numbers.
RiemannTensor riemann(const MetricField& metric, const ChartPoint& p);

/// Sectional curvature of span(u, v). Throws on a degenerate plane
/// (g-Gram determinant <= 1e-10).
double sectional(const RiemannTensor& r, const Mat<double>& g, std::span<const double> u,
                 std::span<const double> v);

struct RicciScalar {
  Mat<double> ricci;
  double scalar = 0.0;
};

RicciScalar ricci_and_scalar(const RiemannTensor& r, const Mat<double>& g);

/// Re-expresses a coordinate-frame tensor in the g-orthonormal frame
/// produced by Gram-Schmidt on the coordinate basis.
RiemannTensor to_orthonormal(const RiemannTensor& r, const Mat<double>& g);

CurvatureOperatorMatrix curvature_operator(const RiemannTensor& r, const Mat<double>& g);

/// Largest violation of the index symmetries and the first Bianchi
/// identity, relative to max |R|.
double riemann_invariant_defect(const RiemannTensor& r);

namespace detail {

/// Christoffel symbols in T-arithmetic; evaluating with T = Dual1 yields
/// their first derivatives, which is how riemann() obtains dGamma.
template <class T>
Rank3<T> christoffel_impl(const MetricField& metric, std::span<const T> x) {
  const int n = metric.dim();
  const Mat<T> g = metric.eval<T>(x);
  const Mat<T> ginv = inverse(g);

  // dg(d, i, j) = d_d g_ij via one dual evaluation per direction.
  Rank3<T> dg(n);
  std::vector<Dual<T>> xd(n);
  for (int d = 0; d < n; ++d) {
    for (int k = 0; k < n; ++k) xd[k] = Dual<T>{x[k], T(k == d ? 1.0 : 0.0)};
    const Mat<Dual<T>> gd = metric.eval<Dual<T>>(xd);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) dg(d, i, j) = gd(i, j).du;
  }

  Rank3<T> gamma(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        T s{};
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (dg(i, j, l) + dg(j, i, l) - dg(l, i, j));
        s = s * T(0.5);
        gamma(k, i, j) = s;
        gamma(k, j, i) = s;
      }
    }
  }
  return gamma;
}

}  // namespace detail

}  // namespace curvgate
