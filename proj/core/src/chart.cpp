#include "curvgate/chart.hpp"

#include <stdexcept>

namespace curvgate {

Mat<double> MetricField::components(const ChartPoint& p) const {
  if (static_cast<int>(p.coords.size()) != dim_)
    throw std::domain_error("MetricField: point dimension mismatch for chart '" + name_ + "'");
  if (!domain_.contains(p.coords))
    throw std::domain_error("MetricField: point outside chart domain of '" + name_ + "'");
  Mat<double> g = eval<double>(p.coords);
  if (symmetry_defect(g) > 1e-12)
    throw std::domain_error("MetricField: components not symmetric at point");
  const auto ev = sym_eigenvalues(g);
  if (ev.front() <= 0.0)
    throw std::domain_error("MetricField: metric not positive definite at point");
  if (ev.back() / ev.front() > 1e12)
    throw std::domain_error("MetricField: metric condition number exceeds 1e12");
  return g;
}

}  // namespace curvgate
