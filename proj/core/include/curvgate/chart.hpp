#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "curvgate/dual.hpp"
#include "curvgate/linalg.hpp"

namespace curvgate {

/// Axis-aligned open box in R^m, the declared domain of a chart.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim()) return false;
    for (int i = 0; i < dim(); ++i)
      if (!(x[i] > lo[i] && x[i] < hi[i])) return false;
    return true;
  }

  static Box cube(int dim, double half_width) {
    Box b;
    b.lo.assign(dim, -half_width);
    b.hi.assign(dim, half_width);
    return b;
  }
};

struct ChartPoint {
  std::string chart_id;
  std::vector<double> coords;
};

/// Metric tensor field over a coordinate chart. The component function is
/// stored three times, instantiated for double and for (nested) dual
/// numbers, so curvature code can differentiate it exactly.
class MetricField {
public:
  template <class F>
  MetricField(int dim, Box domain, std::string name, F f)
      : dim_(dim), domain_(std::move(domain)), name_(std::move(name)) {
    f0_ = [f](std::span<const double> x, Mat<double>& out) { f(x, out); };
    f1_ = [f](std::span<const Dual1> x, Mat<Dual1>& out) { f(x, out); };
    f2_ = [f](std::span<const Dual2> x, Mat<Dual2>& out) { f(x, out); };
  }

  int dim() const { return dim_; }
  const Box& domain() const { return domain_; }
  const std::string& name() const { return name_; }

  /// Raw component evaluation for the three supported scalar types.
  template <class T>
  Mat<T> eval(std::span<const T> x) const {
    Mat<T> g(dim_);
    if constexpr (std::is_same_v<T, double>) f0_(x, g);
    else if constexpr (std::is_same_v<T, Dual1>) f1_(x, g);
    else f2_(x, g);
    return g;
  }

  /// Validated evaluation at a chart point: checks the domain box, the
  /// 1e-12 relative symmetry tolerance, positive definiteness, and the
  /// 1e12 condition-number cutoff. Throws std::domain_error on violation.
  Mat<double> components(const ChartPoint& p) const;

private:
  int dim_;
  Box domain_;
  std::string name_;
  std::function<void(std::span<const double>, Mat<double>&)> f0_;
  std::function<void(std::span<const Dual1>, Mat<Dual1>&)> f1_;
  std::function<void(std::span<const Dual2>, Mat<Dual2>&)> f2_;
};

}  // namespace curvgate
