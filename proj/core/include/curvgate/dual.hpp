#pragma once

#include <cmath>
#include <type_traits>

namespace curvgate {

/// Forward-mode dual number: value + one derivative slot. Nesting
/// (Dual<Dual<double>>) yields exact second derivatives.
template <class T>
struct Dual {
  T re{};  ///< value
  T du{};  ///< derivative

  constexpr Dual() = default;
  constexpr Dual(const T& r) : re(r), du{} {}
  constexpr Dual(const T& r, const T& d) : re(r), du(d) {}
  template <class U, std::enable_if_t<std::is_arithmetic_v<U> && !std::is_same_v<U, T>, int> = 0>
  constexpr Dual(U r) : re(static_cast<double>(r)), du{} {}

  friend constexpr Dual operator-(const Dual& a) { return {-a.re, -a.du}; }
  friend constexpr Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.du + b.du}; }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.du - b.du}; }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.re * b.re, a.du * b.re + a.re * b.du};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    const T q = a.re / b.re;
    return {q, (a.du - q * b.du) / b.re};
  }

  Dual& operator+=(const Dual& b) { return *this = *this + b; }
  Dual& operator-=(const Dual& b) { return *this = *this - b; }
  Dual& operator*=(const Dual& b) { return *this = *this * b; }
  Dual& operator/=(const Dual& b) { return *this = *this / b; }
};

template <>
struct Dual<void>;  // not a type; Dual is meant for double and nested Dual

using Dual1 = Dual<double>;        ///< first derivatives
using Dual2 = Dual<Dual<double>>;  ///< second derivatives (nested)

inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& x) { return value_of(x.re); }

using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

template <class T>
Dual<T> sin(const Dual<T>& a) { return {sin(a.re), a.du * cos(a.re)}; }
template <class T>
Dual<T> cos(const Dual<T>& a) { return {cos(a.re), -a.du * sin(a.re)}; }
template <class T>
Dual<T> exp(const Dual<T>& a) { const T e = exp(a.re); return {e, a.du * e}; }
template <class T>
Dual<T> log(const Dual<T>& a) { return {log(a.re), a.du / a.re}; }
template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  const T s = sqrt(a.re);
  return {s, a.du / (s + s)};
}

}  // namespace curvgate
