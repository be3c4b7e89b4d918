#include "curvgate/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace curvgate {

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa an integer.
  for (int i = 0; i < 53 && mant != std::floor(mant); ++i) {
    mant *= 2.0;
    --exp;
  }
  const auto n = static_cast<std::int64_t>(mant);
  if (exp >= 0) {
    if (exp > 62) throw std::overflow_error("Rational: double exponent too large");
    return make_checked(i128(n) << exp, 1);
  }
  if (exp < -62) throw std::overflow_error("Rational: double exponent too small");
  return make_checked(n, i128(1) << (-exp));
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'"); };
  std::size_t i = 0;
  auto read_int = [&](bool allow_sign) -> std::int64_t {
    std::size_t start = i;
    if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits_from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_from) fail();
    return std::strtoll(std::string(text.substr(start, i - start)).c_str(), nullptr, 10);
  };

  const std::int64_t whole = read_int(true);
  if (i == text.size()) return Rational(whole);
  if (text[i] == '/') {
    ++i;
    const std::int64_t d = read_int(true);
    if (i != text.size()) fail();
    return Rational(whole, d);
  }
  if (text[i] == '.') {
    ++i;
    std::size_t frac_from = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size() || i == frac_from) fail();
    const std::size_t k = i - frac_from;
    if (k > 17) fail();
    i128 den = 1;
    for (std::size_t j = 0; j < k; ++j) den *= 10;
    const std::int64_t frac = std::strtoll(std::string(text.substr(frac_from, k)).c_str(), nullptr, 10);
    const bool neg = text[0] == '-';
    i128 n = i128(whole < 0 ? -whole : whole) * den + frac;
    if (neg || whole < 0) n = -n;
    return make_checked(n, den);
  }
  fail();
  return Rational(0);  // unreachable
}

}  // namespace curvgate
