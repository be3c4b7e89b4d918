#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvgate/constants.hpp"
#include "curvgate/model_spaces.hpp"
#include "curvgate/profile.hpp"
#include "curvgate/rational.hpp"

namespace curvgate {

/// Curvature bounds of the ambient manifold feeding theorem hypotheses.
/// The bounds are independent data: supplying sec bounds does not imply
/// anything about gamma and vice versa.
struct AmbientSummary {
  int dim = 0;  ///< ambient dimension m+1
  std::optional<Rational> gamma;            ///< lower bound of the curvature operator
  std::optional<Rational> sec_lo, sec_hi;   ///< sectional pinching [a, b]
  std::optional<Rational> ricci_normal_lb;  ///< lower bound for Ric(N, N)
  std::optional<Rational> ricci_lb;         ///< uniform Ricci lower bound
  std::optional<Rational> scalar_lb;        ///< lower bound of the scalar curvature
  std::vector<std::string> provenance;

  static AmbientSummary from_model(const ModelSpec& spec);
  void validate() const;

  friend bool operator==(const AmbientSummary&, const AmbientSummary&) = default;
};

struct AssertedFlag {
  bool asserted = false;
  std::string provenance;

  friend bool operator==(const AssertedFlag&, const AssertedFlag&) = default;
};

/// Caller-asserted, never computed: properties of the immersion that are
/// analytic rather than pointwise data.
struct AnalysisFlags {
  AssertedFlag stability{true, "input assumption: stable (or strongly stable CMC) immersion"};
  AssertedFlag not_totally_geodesic;
  AssertedFlag ric_normal_somewhere_positive;
  AssertedFlag infinite_volume;

  friend bool operator==(const AnalysisFlags&, const AnalysisFlags&) = default;
};

struct Margin {
  enum class Kind { None, Exact, Float } kind = Kind::None;
  Rational exact{0};
  double approx = 0.0;

  static Margin none() { return {}; }
  static Margin of(const Rational& r) { return {Kind::Exact, r, r.to_double()}; }
  static Margin of(double v) { return {Kind::Float, Rational(0), v}; }

  friend bool operator==(const Margin&, const Margin&) = default;
};

struct Hypothesis {
  std::string name;
  bool pass = false;
  Margin margin;
  bool strict = false;  ///< true when the theorem states a strict inequality

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

struct Conclusion {
  enum class Kind { ConstantLength, Vanishing, RankBound, NullityIn01, NotApplicable };
  Kind kind = Kind::NotApplicable;
  std::vector<int> degrees;    ///< Vanishing: form degrees; empty means spinors
  long long rank = 0;          ///< RankBound payload / attached spinor rank

  friend bool operator==(const Conclusion&, const Conclusion&) = default;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::vector<Hypothesis> hypotheses;
  Conclusion conclusion;
  std::vector<std::string> notes;

  bool applicable() const { return conclusion.kind != Conclusion::Kind::NotApplicable; }

  friend bool operator==(const TheoremVerdict&, const TheoremVerdict&) = default;
};

// --- scalar identities -----------------------------------------------------

/// Induced scalar curvature from the traced Gauss equation:
/// s_induced = s_ambient + H^2 - |A|^2 - 2 Ric(N,N). Inputs must describe
/// the same ambient point; the identity does not check consistency.
Rational gauss_codazzi_scalar(const Rational& s_ambient, const PrincipalCurvatureProfile& profile,
                              const Rational& ric_normal);

/// Lichnerowicz-type spinor term (s_ambient + H^2 + |A|^2) / 4.
Rational spinor_term(const Rational& s_ambient_lb, const PrincipalCurvatureProfile& profile);

/// p-form Weitzenboeck scalar lower bound:
/// p(m-p) gamma + ric_normal_lb + |A|^2 + min_alpha K_alpha (H - K_alpha).
Rational weitzenbock_lower_bound(long m, long p, const Rational& gamma,
                                 const Rational& ric_normal_lb,
                                 const PrincipalCurvatureProfile& profile);

// --- single-theorem verdicts ------------------------------------------------

enum class StabilityOperatorSign { NonnegEverywhere, NonposEverywhere, Mixed };

/// Nullity of the stability operator lies in {0, 1} when |A|^2 + Ric(N,N)
/// has one sign everywhere (caller classifies the sign).
TheoremVerdict nullity_verdict(StabilityOperatorSign sign_info);

TheoremVerdict spin_verdict(const AmbientSummary& ambient, const PrincipalCurvatureProfile& profile,
                            const AnalysisFlags& flags);

/// Hodge-vanishing rows (points 1-3; point 3 only when the dual-normalized
/// degree is 2). Degrees outside [2, m-2] are rejected; p and m-p give
/// identical conclusions.
std::vector<TheoremVerdict> hodge_verdicts(const AmbientSummary& ambient,
                                           const PrincipalCurvatureProfile& profile, int p,
                                           const AnalysisFlags& flags);

TheoremVerdict abound_verdict(const AmbientSummary& ambient,
                              const PrincipalCurvatureProfile& profile, int p,
                              const AnalysisFlags& flags);

// --- Berger-sphere threshold table -------------------------------------------

/// Exact delta-ranges of the three Berger-sphere vanishing statements,
/// derived from the closed-form curvature data and the pinching constants
/// (never transcribed): spinors need delta <= scalar zero; p-forms need
/// delta below the larger of the curvature-operator threshold and the
/// pinching solution of delta = eps_{2n,n} (4 - 3 delta); 2-forms need
/// delta between the solutions of 4 - 3 delta = c_{2n} delta and
/// delta = c_{2n} (4 - 3 delta).
struct BergerThresholds {
  long n = 0;
  Rational spinor_delta_max;
  Rational curvop_delta_max;
  Rational pform_pinch_delta_max;
  Rational pform_delta_max;  ///< max of the previous two
  Rational two_form_delta_min;
  Rational two_form_delta_max;
  Rational ricci_delta_max;  ///< Ricci > 0 iff delta below this
  Rational sec_delta_max;    ///< sec > 0 iff delta below this
  std::vector<std::string> notes;
};

BergerThresholds berger_sphere_verdicts(long n);

/// Concrete Berger rows for one (n, delta) and one degree.
std::vector<TheoremVerdict> berger_rows(long n, const Rational& delta,
                                        const PrincipalCurvatureProfile& profile, int p,
                                        const AnalysisFlags& flags);

struct Figure1Row {
  long n = 0;
  /// Labeled special delta values, in a fixed label order.
  std::vector<std::pair<std::string, Rational>> values;
  /// Labels sorted by ascending value (ties keep label order).
  std::vector<std::string> ascending_labels;
};

/// Threshold table underlying the delta-ordering comparison; n_range must
/// lie inside [2, 64]. The sort order of the labels is identical for all
/// n > 6; for n < 6 the two p-form thresholds swap; at n = 6 they coincide.
std::vector<Figure1Row> figure1_data(long n_min, long n_max);

}  // namespace curvgate
