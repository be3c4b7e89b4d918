#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvgate/rational.hpp"

namespace curvgate {

/// Principal curvatures k_1..k_m of a hypersurface at a point, exact.
/// H and |A|^2 are always recomputed from k.
class PrincipalCurvatureProfile {
public:
  explicit PrincipalCurvatureProfile(std::vector<Rational> k);

  static PrincipalCurvatureProfile from_doubles(const std::vector<double>& k);

  int size() const { return static_cast<int>(k_.size()); }
  const std::vector<Rational>& k() const { return k_; }

  Rational mean_curvature() const;   ///< H = sum k_i
  Rational norm_a_squared() const;   ///< |A|^2 = sum k_i^2

  /// H == 0 exactly, or |H| < 1e-12 for float-derived inputs.
  bool is_minimal() const;

  std::string str() const;

private:
  std::vector<Rational> k_;
};

/// Sum of the principal curvatures selected by alpha (0-based indices).
/// The complement sum is H - K_alpha.
Rational K_alpha(const PrincipalCurvatureProfile& profile, const std::vector<int>& alpha);

struct ConditionResult {
  bool holds = false;
  std::vector<int> worst_alpha;  ///< 0-based indices attaining the extreme
  Rational margin{0};            ///< slack of the inequality (>= 0 on pass)
};

/// Minimal-case condition |A|^2 - K_alpha^2 >= 0 over all |alpha| = p.
/// max |K_alpha| is taken at the sorted extremes (sum of p largest vs minus
/// the sum of p smallest). Requires a minimal profile.
ConditionResult check_minimal_condition(const PrincipalCurvatureProfile& profile, int p);

/// CMC condition |A|^2 + K_alpha (H - K_alpha) >= 0 over all |alpha| = p.
/// K (H - K) is concave in K, so the minimum over achievable sums sits at
/// one of the two sorted extremes.
ConditionResult check_cmc_condition(const PrincipalCurvatureProfile& profile, int p);

enum class ZeroppKind { FourNonzero, TwoOppositeBlocks, None };

struct ZeroppResult {
  ZeroppKind kind = ZeroppKind::None;
  long block_multiplicity = 0;          ///< l, for TwoOppositeBlocks
  bool certifies_p = false;             ///< shortcut settles the requested p
  std::optional<Rational> margin;       ///< (2l - p^2) k^2 for TwoOppositeBlocks
  std::string note;
};

/// Structural shortcuts that certify the minimal condition without
/// enumeration: at most four non-zero principal curvatures (every p), or
/// two opposite blocks +/-k of equal multiplicity l (every p <= sqrt(2l)).
ZeroppResult zeropp_sufficient(const PrincipalCurvatureProfile& profile, int p);

/// Profile text: comma-separated rationals ("1,1,-2/3") or a named preset:
///   bdgg:n=4[,k=1]        two blocks +/-k, each of multiplicity n
///   totally-geodesic:m=6  all zero
///   opposite-pair:t=1,m=8 (-t, 0, ..., 0, t)
PrincipalCurvatureProfile parse_profile(std::string_view text);

}  // namespace curvgate
