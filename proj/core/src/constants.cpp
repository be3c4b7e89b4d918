#include "curvgate/constants.hpp"

#include <algorithm>
#include <stdexcept>

namespace curvgate {

Rational epsilon_constant(long m, long p) {
  if (m < 6) throw std::invalid_argument("epsilon_constant: requires m >= 6");
  if (p < 2 || 2 * p > m)
    throw std::invalid_argument("epsilon_constant: requires 2 <= p <= m/2");
  const long mu = mu_of(m);
  const Rational pq = Rational(p) * Rational(m - p);
  return (pq * Rational(2 * mu + 1) + Rational(3 * m)) / (Rational(2) * pq * Rational(mu - 1));
}

Rational c_constant(long m) {
  if (m < 6) throw std::invalid_argument("c_constant: requires m >= 6");
  if (m % 2 == 0) return Rational(11 * m - 16, 2 * (m - 2));
  return Rational(11 * m - 18, 2 * (m - 3));
}

Rational beta_bound(long m, long p, const Rational& gamma, const Rational& ricci_lb) {
  if (p < 2 || p > m - 2)
    throw std::invalid_argument("beta_bound: requires 2 <= p <= m-2");
  const long q = std::min(p, m - p);
  if (q < 2) throw std::invalid_argument("beta_bound: requires min{p, m-p} >= 2");
  return (gamma * Rational(p) * Rational(m - p) + ricci_lb) / Rational(q - 1);
}

Rational beta_sphere(long p, long m) { return beta_bound(m, p, Rational(1), Rational(m)); }

Rational pinched_operator_lb(const Rational& a, const Rational& b, long m) {
  if (a.sign() <= 0) throw std::invalid_argument("pinched_operator_lb: requires a > 0");
  if (b < a) throw std::invalid_argument("pinched_operator_lb: requires a <= b");
  const long mu = mu_of(m);
  return (a + b) / Rational(2) - (b - a) * Rational(4 * mu - 1, 6);
}

Rational berger_component_bound(const Rational& a, const Rational& b) {
  return Rational(2, 3) * (b - a);
}

std::vector<long> mari_set(long lo, long hi) {
  std::vector<long> out;
  for (long m = std::max(lo, 4L); m <= hi; ++m)
    if (beta_sphere(ell_of(m), m) > Rational(m)) out.push_back(m);
  return out;
}

long long spinor_rank_bound(long n) {
  if (n < 1) throw std::invalid_argument("spinor_rank_bound: requires n >= 1");
  const long e = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  if (e >= 62) throw std::overflow_error("spinor_rank_bound: rank exceeds int64");
  return 1LL << e;
}

PinchingConstants pinching_constants(long m, long p) {
  PinchingConstants pc;
  pc.m = m;
  pc.p = p;
  pc.epsilon = epsilon_constant(m, p);
  pc.c = c_constant(m);
  pc.mu = mu_of(m);
  pc.ell = ell_of(m);
  return pc;
}

}  // namespace curvgate
