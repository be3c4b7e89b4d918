#include "curvgate/profile.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace curvgate {

PrincipalCurvatureProfile::PrincipalCurvatureProfile(std::vector<Rational> k) : k_(std::move(k)) {
  if (k_.size() < 2)
    throw std::invalid_argument("PrincipalCurvatureProfile: need at least two curvatures");
}

PrincipalCurvatureProfile PrincipalCurvatureProfile::from_doubles(const std::vector<double>& k) {
  std::vector<Rational> r;
  r.reserve(k.size());
  for (double v : k) r.push_back(Rational::from_double(v));
  return PrincipalCurvatureProfile(std::move(r));
}

Rational PrincipalCurvatureProfile::mean_curvature() const {
  Rational h(0);
  for (const auto& v : k_) h += v;
  return h;
}

Rational PrincipalCurvatureProfile::norm_a_squared() const {
  Rational s(0);
  for (const auto& v : k_) s += v * v;
  return s;
}

bool PrincipalCurvatureProfile::is_minimal() const {
  const Rational h = mean_curvature();
  return h.is_zero() || std::abs(h.to_double()) < 1e-12;
}

std::string PrincipalCurvatureProfile::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (i) os << ",";
    os << k_[i].str();
  }
  return os.str();
}

Rational K_alpha(const PrincipalCurvatureProfile& profile, const std::vector<int>& alpha) {
  if (alpha.empty()) throw std::invalid_argument("K_alpha: empty index set");
  Rational s(0);
  for (int i : alpha) {
    if (i < 0 || i >= profile.size())
      throw std::out_of_range("K_alpha: index " + std::to_string(i) + " out of range");
    s += profile.k()[i];
  }
  return s;
}

namespace {

struct Extremes {
  Rational sum_largest, sum_smallest;
  std::vector<int> largest_idx, smallest_idx;  // sorted index sets
};

/// Sums of the p largest and p smallest curvatures; index ties broken by
/// position so worst_alpha is deterministic.
Extremes sorted_extremes(const PrincipalCurvatureProfile& profile, int p) {
  const int m = profile.size();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return profile.k()[a] < profile.k()[b]; });
  Extremes e;
  e.sum_largest = Rational(0);
  e.sum_smallest = Rational(0);
  for (int i = 0; i < p; ++i) {
    e.smallest_idx.push_back(order[i]);
    e.sum_smallest += profile.k()[order[i]];
    e.largest_idx.push_back(order[m - 1 - i]);
    e.sum_largest += profile.k()[order[m - 1 - i]];
  }
  std::sort(e.smallest_idx.begin(), e.smallest_idx.end());
  std::sort(e.largest_idx.begin(), e.largest_idx.end());
  return e;
}

void require_degree(const PrincipalCurvatureProfile& profile, int p) {
  if (p < 1 || p > profile.size() - 1)
    throw std::invalid_argument("condition check: p must lie in [1, m-1], got " +
                                std::to_string(p));
}

}  // namespace

ConditionResult check_minimal_condition(const PrincipalCurvatureProfile& profile, int p) {
  require_degree(profile, p);
  if (!profile.is_minimal())
    throw std::invalid_argument(
        "check_minimal_condition: profile has H != 0; use check_cmc_condition");
  const Rational a2 = profile.norm_a_squared();
  const Extremes e = sorted_extremes(profile, p);
  // max K_alpha^2 is attained at the sum of the p largest or p smallest.
  const Rational top = e.sum_largest * e.sum_largest;
  const Rational bot = e.sum_smallest * e.sum_smallest;
  ConditionResult r;
  if (top >= bot) {
    r.worst_alpha = e.largest_idx;
    r.margin = a2 - top;
  } else {
    r.worst_alpha = e.smallest_idx;
    r.margin = a2 - bot;
  }
  r.holds = r.margin >= Rational(0);
  return r;
}

ConditionResult check_cmc_condition(const PrincipalCurvatureProfile& profile, int p) {
  require_degree(profile, p);
  const Rational a2 = profile.norm_a_squared();
  const Rational h = profile.mean_curvature();
  const Extremes e = sorted_extremes(profile, p);
  const Rational q_top = e.sum_largest * (h - e.sum_largest);
  const Rational q_bot = e.sum_smallest * (h - e.sum_smallest);
  ConditionResult r;
  if (q_top <= q_bot) {
    r.worst_alpha = e.largest_idx;
    r.margin = a2 + q_top;
  } else {
    r.worst_alpha = e.smallest_idx;
    r.margin = a2 + q_bot;
  }
  r.holds = r.margin >= Rational(0);
  return r;
}

ZeroppResult zeropp_sufficient(const PrincipalCurvatureProfile& profile, int p) {
  require_degree(profile, p);
  if (!profile.is_minimal())
    throw std::invalid_argument("zeropp_sufficient: requires a minimal profile");
  ZeroppResult res;

  int nonzero = 0;
  for (const auto& v : profile.k())
    if (!v.is_zero()) ++nonzero;
  if (nonzero <= 4) {
    res.kind = ZeroppKind::FourNonzero;
    res.certifies_p = true;
    res.note = "at most four non-zero principal curvatures: condition holds for every p";
    return res;
  }

  // Exactly two non-zero values +/-k with equal multiplicity l.
  std::map<Rational, long, std::less<>> counts;
  for (const auto& v : profile.k())
    if (!v.is_zero()) ++counts[v];
  if (counts.size() == 2) {
    const auto lo = counts.begin();
    const auto hi = std::next(lo);
    if (lo->first == -hi->first && lo->second == hi->second) {
      const long l = lo->second;
      res.kind = ZeroppKind::TwoOppositeBlocks;
      res.block_multiplicity = l;
      res.certifies_p = static_cast<long>(p) * p <= 2 * l;
      const Rational k2 = hi->first * hi->first;
      res.margin = (Rational(2 * l) - Rational(p) * Rational(p)) * k2;
      res.note = res.certifies_p
                     ? "two opposite blocks: condition holds for p^2 <= 2l"
                     : "two opposite blocks but p^2 > 2l: shortcut inconclusive";
      return res;
    }
  }
  res.note = "no structural shortcut applies";
  return res;
}

namespace {

std::map<std::string, std::string> parse_kv(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("profile preset: expected key=value, got '" +
                                  std::string(item) + "'");
    kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return kv;
}

long preset_int(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end())
    throw std::invalid_argument("profile preset: missing parameter '" + key + "'");
  const Rational r = Rational::parse(it->second);
  if (r.den() != 1)
    throw std::invalid_argument("profile preset: parameter '" + key + "' must be an integer");
  return r.num();
}

}  // namespace

PrincipalCurvatureProfile parse_profile(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string name(text.substr(0, colon));
    const auto kv = parse_kv(text.substr(colon + 1));
    if (name == "bdgg") {
      const long n = preset_int(kv, "n");
      if (n < 1) throw std::invalid_argument("profile preset bdgg: n must be >= 1");
      Rational k(1);
      if (auto it = kv.find("k"); it != kv.end()) k = Rational::parse(it->second);
      std::vector<Rational> ks;
      for (long i = 0; i < n; ++i) ks.push_back(k);
      for (long i = 0; i < n; ++i) ks.push_back(-k);
      return PrincipalCurvatureProfile(std::move(ks));
    }
    if (name == "totally-geodesic") {
      const long m = preset_int(kv, "m");
      if (m < 2) throw std::invalid_argument("profile preset totally-geodesic: m must be >= 2");
      return PrincipalCurvatureProfile(std::vector<Rational>(m, Rational(0)));
    }
    if (name == "opposite-pair") {
      const long m = preset_int(kv, "m");
      if (m < 2) throw std::invalid_argument("profile preset opposite-pair: m must be >= 2");
      Rational t(1);
      if (auto it = kv.find("t"); it != kv.end()) t = Rational::parse(it->second);
      std::vector<Rational> ks(m, Rational(0));
      ks.front() = -t;
      ks.back() = t;
      return PrincipalCurvatureProfile(std::move(ks));
    }
    throw std::invalid_argument("unknown profile preset '" + name + "'");
  }

  std::vector<Rational> ks;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok(
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    ks.push_back(Rational::parse(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return PrincipalCurvatureProfile(std::move(ks));
}

}  // namespace curvgate
