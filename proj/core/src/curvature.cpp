#include "curvgate/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvgate {

double Rank4::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

Rank3<double> christoffel(const MetricField& metric, const ChartPoint& p) {
  metric.components(p);  // validates domain, symmetry, conditioning
  return detail::christoffel_impl<double>(metric, p.coords);
}

RiemannTensor riemann(const MetricField& metric, const ChartPoint& p) {
  const Mat<double> g = metric.components(p);
  const int n = metric.dim();

  const Rank3<double> gamma = detail::christoffel_impl<double>(metric, p.coords);

  // dgamma[d](k,i,j) = d_d Gamma^k_{ij}, one dual-valued pass per direction.
  std::vector<Rank3<double>> dgamma(n, Rank3<double>(n));
  std::vector<Dual1> xd(n);
  for (int d = 0; d < n; ++d) {
    for (int k = 0; k < n; ++k) xd[k] = Dual1{p.coords[k], k == d ? 1.0 : 0.0};
    const Rank3<Dual1> gd = detail::christoffel_impl<Dual1>(metric, std::span<const Dual1>(xd));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dgamma[d](k, i, j) = gd(k, i, j).du;
  }

  // R(d_a, d_b) d_d = Riem^e_{d;ab} d_e, then lower: R_abcd = g_ce Riem^e_{d;ab}.
  RiemannTensor r;
  r.point = p;
  r.frame = Frame::Coordinate;
  r.components = Rank4(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int d = 0; d < n; ++d) {
        for (int e = 0; e < n; ++e) {
          double up = dgamma[a](e, b, d) - dgamma[b](e, a, d);
          for (int f = 0; f < n; ++f)
            up += gamma(e, a, f) * gamma(f, b, d) - gamma(e, b, f) * gamma(f, a, d);
          for (int c = 0; c < n; ++c) r.components(a, b, c, d) += g(c, e) * up;
        }
      }
    }
  }
  return r;
}

double sectional(const RiemannTensor& r, const Mat<double>& g, std::span<const double> u,
                 std::span<const double> v) {
  const int n = r.dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw std::invalid_argument("sectional: vector dimension mismatch");
  auto ip = [&](std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += a[i] * g(i, j) * b[j];
    return s;
  };
  const double gram = ip(u, u) * ip(v, v) - ip(u, v) * ip(u, v);
  if (gram <= 1e-10) throw std::domain_error("sectional: degenerate plane");
  double num = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) num += r.components(a, b, c, d) * u[a] * v[b] * u[c] * v[d];
  return num / gram;
}

RicciScalar ricci_and_scalar(const RiemannTensor& r, const Mat<double>& g) {
  const int n = r.dim();
  const Mat<double> ginv = inverse(g);
  RicciScalar out;
  out.ricci = Mat<double>(n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      double s = 0.0;
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) s += ginv(a, c) * r.components(a, b, c, d);
      out.ricci(b, d) = s;
    }
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) out.scalar += ginv(b, d) * out.ricci(b, d);
  return out;
}

RiemannTensor to_orthonormal(const RiemannTensor& r, const Mat<double>& g) {
  if (r.frame == Frame::Orthonormal) return r;
  const int n = r.dim();
  const Mat<double> e = gram_schmidt_frame(g);

  // Contract one index per pass to keep the cost at O(n^5).
  auto contract_first = [&](const Rank4& in) {
    Rank4 out(n);
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += e(a, i) * in(i, j, k, l);
            out(j, k, l, a) = s;  // rotate so the next pass again hits index 0
          }
    return out;
  };
  Rank4 t = r.components;
  for (int pass = 0; pass < 4; ++pass) t = contract_first(t);

  RiemannTensor out;
  out.point = r.point;
  out.frame = Frame::Orthonormal;
  out.components = std::move(t);
  return out;
}

CurvatureOperatorMatrix curvature_operator(const RiemannTensor& r, const Mat<double>& g) {
  const RiemannTensor ron = to_orthonormal(r, g);
  const int n = ron.dim();
  CurvatureOperatorMatrix op;
  op.point = ron.point;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) op.basis.emplace_back(i, j);
  const int big = static_cast<int>(op.basis.size());
  op.matrix = Mat<double>(big);
  for (int row = 0; row < big; ++row)
    for (int col = 0; col < big; ++col) {
      const auto [a, b] = op.basis[row];
      const auto [c, d] = op.basis[col];
      op.matrix(row, col) = ron.components(a, b, c, d);
    }
  return op;
}

double riemann_invariant_defect(const RiemannTensor& r) {
  const int n = r.dim();
  const auto& t = r.components;
  const double scale = std::max(1e-300, t.max_abs());
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          worst = std::max(worst, std::abs(t(i, j, k, l) + t(j, i, k, l)));
          worst = std::max(worst, std::abs(t(i, j, k, l) + t(i, j, l, k)));
          worst = std::max(worst, std::abs(t(i, j, k, l) - t(k, l, i, j)));
          worst = std::max(worst, std::abs(t(i, j, k, l) + t(i, k, l, j) + t(i, l, j, k)));
        }
  return worst / scale;
}

}  // namespace curvgate
