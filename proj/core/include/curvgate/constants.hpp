#pragma once

#include <vector>

#include "curvgate/rational.hpp"

namespace curvgate {

/// mu = floor((m+1)/2), the half-dimension entering the pinched
/// curvature-operator estimate.
inline long mu_of(long m) { return (m + 1) / 2; }

/// ell = floor(m/2), the block count of a 2-form in normal form.
inline long ell_of(long m) { return m / 2; }

/// Admissible pinching ratio for p-forms:
///   eps_{m,p} = (p(m-p)(2mu+1) + 3m) / (2 p(m-p) (mu-1)).
/// Requires m >= 6 and 2 <= p <= m/2.
Rational epsilon_constant(long m, long p);

/// Admissible pinching ratio for 2-forms:
///   (11m-16)/(2(m-2)) for even m, (11m-18)/(2(m-3)) for odd m. m >= 6.
Rational c_constant(long m);

/// |A|^2 threshold (gamma p(m-p) + b) / (min{p, m-p} - 1); requires
/// 2 <= p <= m-2 and min{p,m-p} >= 2.
Rational beta_bound(long m, long p, const Rational& gamma, const Rational& ricci_lb);

/// Round-sphere specialization beta(p,m) = (p(m-p) + m)/(p - 1).
Rational beta_sphere(long p, long m);

/// Pinched curvature-operator lower bound per bivector pair:
///   (a+b)/2 - (b-a)(4mu-1)/6, mu = floor((m+1)/2). Requires 0 < a <= b.
Rational pinched_operator_lb(const Rational& a, const Rational& b, long m);

/// Mixed curvature-component bound under [a,b] pinching: 2(b-a)/3.
Rational berger_component_bound(const Rational& a, const Rational& b);

/// {m in [lo,hi] : beta(floor(m/2), m) > m}.
std::vector<long> mari_set(long lo, long hi);

/// L^2-kernel rank bound of the spinor bundle in dimension n:
/// 2^{n/2} for even n, 2^{(n-1)/2} for odd n.
long long spinor_rank_bound(long n);

/// Bundle of the exact constants for one (m, p).
struct PinchingConstants {
  long m = 0, p = 0;
  Rational epsilon;
  Rational c;
  long mu = 0, ell = 0;
};

PinchingConstants pinching_constants(long m, long p);

}  // namespace curvgate
