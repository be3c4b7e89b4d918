#include "curvgate/linalg.hpp"

#include <algorithm>
#include <limits>

namespace curvgate {

double frobenius_norm(const Mat<double>& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double max_abs(const Mat<double>& a) {
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

double symmetry_defect(const Mat<double>& a) {
  const double scale = max_abs(a);
  if (scale == 0.0) return 0.0;
  double d = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - a(j, i)));
  return d / scale;
}

namespace {

double off_diagonal_norm(const Mat<double>& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

std::vector<double> sym_eigenvalues(Mat<double> a, double tol) {
  const int n = a.dim();
  if (n == 0) return {};
  if (symmetry_defect(a) > 1e-10)
    throw std::invalid_argument("sym_eigenvalues: matrix is not symmetric");

  const double stop = tol * std::max(1.0, frobenius_norm(a));
  constexpr int max_sweeps = 64;
  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (++sweep > max_sweeps)
      throw std::runtime_error("sym_eigenvalues: Jacobi iteration did not converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double sym_condition_number(const Mat<double>& a) {
  const auto ev = sym_eigenvalues(a);
  double lo = std::abs(ev.front()), hi = std::abs(ev.front());
  for (double v : ev) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

Mat<double> gram_schmidt_frame(const Mat<double>& g) {
  const int n = g.dim();
  Mat<double> e(n);  // rows are frame vectors in coordinate components
  for (int i = 0; i < n; ++i) e(i, i) = 1.0;
  auto inner = [&](int a, int b) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += e(a, i) * g(i, j) * e(b, j);
    return s;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < a; ++b) {
      const double proj = inner(a, b);
      for (int i = 0; i < n; ++i) e(a, i) -= proj * e(b, i);
    }
    const double nrm2 = inner(a, a);
    if (!(nrm2 > 0.0))
      throw std::domain_error("gram_schmidt_frame: metric is not positive definite");
    const double inv = 1.0 / std::sqrt(nrm2);
    for (int i = 0; i < n; ++i) e(a, i) *= inv;
  }
  return e;
}

}  // namespace curvgate
