#include "curvgate/verdicts.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace curvgate {

AmbientSummary AmbientSummary::from_model(const ModelSpec& spec) {
  const CurvatureSummary cs = closed_form_summary(spec);
  AmbientSummary a;
  a.dim = cs.dim;
  a.gamma = cs.gamma;
  a.sec_lo = cs.sec_min;
  a.sec_hi = cs.sec_max;
  if (cs.ricci && !cs.ricci->empty()) {
    a.ricci_lb = cs.ricci->front().value;  // lines are sorted ascending
    a.ricci_normal_lb = a.ricci_lb;
  }
  a.scalar_lb = cs.scalar;
  a.provenance.push_back("closed-form bounds of model " + spec.text());
  for (const auto& n : cs.notes) a.provenance.push_back(n);
  a.validate();
  return a;
}

void AmbientSummary::validate() const {
  if (dim < 2) throw std::invalid_argument("AmbientSummary: ambient dimension must be >= 2");
  if (sec_lo && sec_hi && *sec_lo > *sec_hi)
    throw std::invalid_argument("AmbientSummary: sec bounds require a <= b");
}

Rational gauss_codazzi_scalar(const Rational& s_ambient, const PrincipalCurvatureProfile& profile,
                              const Rational& ric_normal) {
  const Rational h = profile.mean_curvature();
  return s_ambient + h * h - profile.norm_a_squared() - Rational(2) * ric_normal;
}

Rational spinor_term(const Rational& s_ambient_lb, const PrincipalCurvatureProfile& profile) {
  const Rational h = profile.mean_curvature();
  return (s_ambient_lb + h * h + profile.norm_a_squared()) / Rational(4);
}

Rational weitzenbock_lower_bound(long m, long p, const Rational& gamma,
                                 const Rational& ric_normal_lb,
                                 const PrincipalCurvatureProfile& profile) {
  if (profile.size() != m)
    throw std::invalid_argument("weitzenbock_lower_bound: profile size differs from m");
  // check_cmc_condition's margin is |A|^2 + min K(H-K); for H = 0 that is
  // |A|^2 - max K^2, so the margin is exactly the extrinsic part here.
  const ConditionResult c = check_cmc_condition(profile, static_cast<int>(p));
  return Rational(p) * Rational(m - p) * gamma + ric_normal_lb + c.margin;
}

namespace {

Hypothesis hyp(std::string name, bool pass, Margin margin = Margin::none(), bool strict = false) {
  Hypothesis h;
  h.name = std::move(name);
  h.pass = pass;
  h.margin = margin;
  h.strict = strict;
  return h;
}

Hypothesis flag_hyp(std::string name, const AssertedFlag& f) {
  Hypothesis h = hyp(std::move(name), f.asserted);
  return h;
}

/// A verdict may conclude only when every hypothesis passed.
void finalize(TheoremVerdict& v) {
  for (const auto& h : v.hypotheses) {
    if (!h.pass) {
      v.conclusion.kind = Conclusion::Kind::NotApplicable;
      v.conclusion.degrees.clear();
      v.conclusion.rank = 0;
      return;
    }
  }
}

}  // namespace

TheoremVerdict nullity_verdict(StabilityOperatorSign sign_info) {
  TheoremVerdict v;
  v.theorem_id = "Nullity";
  const bool one_signed = sign_info != StabilityOperatorSign::Mixed;
  v.hypotheses.push_back(hyp("stability_operator_potential_one_signed", one_signed));
  if (one_signed) {
    v.conclusion.kind = Conclusion::Kind::NullityIn01;
    v.notes.push_back(sign_info == StabilityOperatorSign::NonnegEverywhere
                          ? "|A|^2 + Ric(N,N) >= 0 everywhere (caller classified)"
                          : "|A|^2 + Ric(N,N) <= 0 everywhere (caller classified)");
  } else {
    v.notes.push_back("|A|^2 + Ric(N,N) changes sign; no nullity statement");
  }
  finalize(v);
  return v;
}

TheoremVerdict spin_verdict(const AmbientSummary& ambient,
                            const PrincipalCurvatureProfile& profile,
                            const AnalysisFlags& flags) {
  const int m = profile.size();
  if (ambient.dim != m + 1)
    throw std::invalid_argument("spin_verdict: profile length must be ambient dim - 1");
  const bool minimal = profile.is_minimal();
  TheoremVerdict v;
  v.theorem_id = minimal ? "SpinVanishing" : "CMC-Spin";
  v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
  v.hypotheses.push_back(hyp("scalar_lower_bound_supplied", ambient.scalar_lb.has_value()));
  if (ambient.scalar_lb) {
    const Rational h = profile.mean_curvature();
    const Rational guard = *ambient.scalar_lb + h * h;
    v.hypotheses.push_back(hyp("scalar_plus_H2_nonneg", guard >= Rational(0), Margin::of(guard)));
    const Rational term = spinor_term(*ambient.scalar_lb, profile);
    v.conclusion.kind = Conclusion::Kind::ConstantLength;
    v.conclusion.rank = spinor_rank_bound(m);
    v.notes.push_back("L2-kernel rank bound " + std::to_string(v.conclusion.rank) +
                      " (spinor bundle rank in dimension " + std::to_string(m) + ")");
    if (term > Rational(0)) {
      v.conclusion.kind = Conclusion::Kind::Vanishing;
      v.notes.push_back("Lichnerowicz term positive at the supplied profile: " + term.str());
    } else if (flags.infinite_volume.asserted) {
      v.conclusion.kind = Conclusion::Kind::Vanishing;
      v.notes.push_back("infinite volume asserted: " + flags.infinite_volume.provenance);
    }
    if (v.conclusion.kind == Conclusion::Kind::Vanishing)
      v.notes.push_back("conclusion concerns L2-harmonic spinors (no form degree)");
  }
  finalize(v);
  return v;
}

namespace {

struct HodgeContext {
  int m = 0;
  int p_eff = 0;
  bool minimal = true;
  ConditionResult cond;
  std::string cond_name;
};

HodgeContext make_context(const AmbientSummary& ambient, const PrincipalCurvatureProfile& profile,
                          int p) {
  const int m = profile.size();
  if (ambient.dim != m + 1)
    throw std::invalid_argument("hodge_verdicts: profile length must be ambient dim - 1");
  if (p < 2 || p > m - 2)
    throw std::invalid_argument(
        "hodge_verdicts: degree must lie in [2, m-2]; p in {0,1} (and duals) are the documented "
        "special cases outside the general gate");
  HodgeContext c;
  c.m = m;
  c.p_eff = std::min(p, m - p);
  c.minimal = profile.is_minimal();
  c.cond = c.minimal ? check_minimal_condition(profile, c.p_eff)
                     : check_cmc_condition(profile, c.p_eff);
  c.cond_name = c.minimal ? "minimal_multi_index_condition" : "cmc_multi_index_condition";
  return c;
}

}  // namespace

std::vector<TheoremVerdict> hodge_verdicts(const AmbientSummary& ambient,
                                           const PrincipalCurvatureProfile& profile, int p,
                                           const AnalysisFlags& flags) {
  ambient.validate();
  const HodgeContext c = make_context(ambient, profile, p);
  const std::string prefix = c.minimal ? "HodgeP" : "CMC-P";
  const std::vector<int> degrees{c.p_eff, c.m - c.p_eff};
  std::vector<TheoremVerdict> out;

  // Point 1: curvature-operator route.
  {
    TheoremVerdict v;
    v.theorem_id = prefix + "1";
    v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
    v.hypotheses.push_back(hyp("dimension_m_ge_4", c.m >= 4, Margin::of(Rational(c.m - 4))));
    v.hypotheses.push_back(hyp("curvature_operator_lb_supplied", ambient.gamma.has_value()));
    std::optional<Rational> ric_eff = ambient.ricci_normal_lb;
    if (!ric_eff && ambient.gamma && *ambient.gamma >= Rational(0)) {
      ric_eff = Rational(0);
      v.notes.push_back("Ric(N,N) >= 0 inferred from nonnegative curvature operator");
    }
    if (ambient.gamma && ric_eff) {
      const Rational term =
          Rational(c.p_eff) * Rational(c.m - c.p_eff) * (*ambient.gamma) + *ric_eff;
      v.hypotheses.push_back(
          hyp("restriction_term_nonneg", term >= Rational(0), Margin::of(term)));
    } else {
      v.hypotheses.push_back(hyp("restriction_term_nonneg", false));
      v.notes.push_back("missing gamma or Ric(N,N) lower bound");
    }
    v.hypotheses.push_back(hyp(c.cond_name, c.cond.holds, Margin::of(c.cond.margin)));
    v.conclusion.kind = Conclusion::Kind::ConstantLength;
    if (flags.not_totally_geodesic.asserted || flags.ric_normal_somewhere_positive.asserted) {
      v.conclusion.kind = Conclusion::Kind::Vanishing;
      v.conclusion.degrees = degrees;
      if (flags.not_totally_geodesic.asserted)
        v.notes.push_back("not totally geodesic asserted: " +
                          flags.not_totally_geodesic.provenance);
      if (flags.ric_normal_somewhere_positive.asserted)
        v.notes.push_back("Ric(N,N) somewhere positive asserted: " +
                          flags.ric_normal_somewhere_positive.provenance);
    }
    finalize(v);
    out.push_back(std::move(v));
  }

  // Point 2: pinching route with eps_{m,p}.
  {
    TheoremVerdict v;
    v.theorem_id = prefix + "2";
    v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
    v.hypotheses.push_back(hyp("dimension_m_ge_6", c.m >= 6, Margin::of(Rational(c.m - 6))));
    const bool have_sec = ambient.sec_lo && ambient.sec_hi;
    v.hypotheses.push_back(hyp("sec_pinching_supplied", have_sec));
    if (have_sec && c.m >= 6) {
      const Rational a = *ambient.sec_lo, b = *ambient.sec_hi;
      v.hypotheses.push_back(hyp("sec_lower_bound_positive", a > Rational(0), Margin::of(a), true));
      const Rational eps = epsilon_constant(c.m, c.p_eff);
      v.hypotheses.push_back(
          hyp("pinching_b_le_eps_a", b <= eps * a, Margin::of(eps * a - b)));
      v.notes.push_back("eps_{" + std::to_string(c.m) + "," + std::to_string(c.p_eff) +
                        "} = " + eps.str());
    } else {
      v.hypotheses.push_back(hyp("sec_lower_bound_positive", false, Margin::none(), true));
      v.hypotheses.push_back(hyp("pinching_b_le_eps_a", false));
    }
    v.hypotheses.push_back(hyp(c.cond_name, c.cond.holds, Margin::of(c.cond.margin)));
    v.conclusion.kind = Conclusion::Kind::Vanishing;
    v.conclusion.degrees = degrees;
    finalize(v);
    out.push_back(std::move(v));
  }

  // Point 3: the sharper 2-form pinching.
  if (c.p_eff == 2) {
    TheoremVerdict v;
    v.theorem_id = prefix + "3";
    v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
    v.hypotheses.push_back(hyp("dimension_m_ge_6", c.m >= 6, Margin::of(Rational(c.m - 6))));
    const bool have_sec = ambient.sec_lo && ambient.sec_hi;
    v.hypotheses.push_back(hyp("sec_pinching_supplied", have_sec));
    if (have_sec && c.m >= 6) {
      const Rational a = *ambient.sec_lo, b = *ambient.sec_hi;
      v.hypotheses.push_back(hyp("sec_lower_bound_positive", a > Rational(0), Margin::of(a), true));
      const Rational cm = c_constant(c.m);
      v.hypotheses.push_back(hyp("pinching_b_le_c_a", b <= cm * a, Margin::of(cm * a - b)));
      v.notes.push_back("c_" + std::to_string(c.m) + " = " + cm.str());
    } else {
      v.hypotheses.push_back(hyp("sec_lower_bound_positive", false, Margin::none(), true));
      v.hypotheses.push_back(hyp("pinching_b_le_c_a", false));
    }
    v.hypotheses.push_back(hyp(c.cond_name, c.cond.holds, Margin::of(c.cond.margin)));
    v.conclusion.kind = Conclusion::Kind::Vanishing;
    v.conclusion.degrees = degrees;
    finalize(v);
    out.push_back(std::move(v));
  }

  return out;
}

TheoremVerdict abound_verdict(const AmbientSummary& ambient,
                              const PrincipalCurvatureProfile& profile, int p,
                              const AnalysisFlags& flags) {
  ambient.validate();
  const int m = profile.size();
  if (ambient.dim != m + 1)
    throw std::invalid_argument("abound_verdict: profile length must be ambient dim - 1");
  if (p < 2 || p > m - 2)
    throw std::invalid_argument("abound_verdict: degree must lie in [2, m-2]");
  TheoremVerdict v;
  v.theorem_id = "Abound";
  v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
  v.hypotheses.push_back(hyp("minimal_H_zero", profile.is_minimal()));
  const bool have_gamma = ambient.gamma.has_value() && *ambient.gamma >= Rational(0);
  v.hypotheses.push_back(hyp("curvature_operator_lb_nonneg", have_gamma,
                             ambient.gamma ? Margin::of(*ambient.gamma) : Margin::none()));
  const bool have_ric = ambient.ricci_lb.has_value() && *ambient.ricci_lb > Rational(0);
  v.hypotheses.push_back(hyp("ricci_lb_positive", have_ric,
                             ambient.ricci_lb ? Margin::of(*ambient.ricci_lb) : Margin::none(),
                             true));
  if (have_gamma && have_ric) {
    const Rational threshold = beta_bound(m, p, *ambient.gamma, *ambient.ricci_lb);
    const Rational margin = threshold - profile.norm_a_squared();
    v.hypotheses.push_back(hyp("normA2_le_threshold", margin >= Rational(0), Margin::of(margin)));
    v.notes.push_back("threshold (gamma p(m-p) + b)/(min{p,m-p} - 1) = " + threshold.str());
  } else {
    v.hypotheses.push_back(hyp("normA2_le_threshold", false));
  }
  v.conclusion.kind = Conclusion::Kind::Vanishing;
  v.conclusion.degrees = {std::min(p, m - p), std::max(p, m - p)};
  finalize(v);
  return v;
}

// ---------------------------------------------------------------------------
// Berger-sphere thresholds, derived from the closed forms

namespace {

struct AffineLine {
  Rational at0;     // value at delta = 0 (intercept)
  Rational slope;   // d/d(delta)

  Rational eval(const Rational& d) const { return at0 + slope * d; }
  Rational root() const {
    if (slope.is_zero()) throw std::logic_error("AffineLine: constant line has no root");
    return -at0 / slope;
  }
};

AffineLine fit(const Rational& d1, const Rational& v1, const Rational& d2, const Rational& v2) {
  AffineLine l;
  l.slope = (v2 - v1) / (d2 - d1);
  l.at0 = v1 - l.slope * d1;
  return l;
}

/// Recovers the spectrum lines of the Berger curvature data as affine
/// functions of delta by sampling the closed-form summary at two generic
/// parameters and matching lines by multiplicity.
struct BergerLines {
  std::vector<std::pair<long, AffineLine>> spectrum;  // (multiplicity, line)
  std::vector<std::pair<long, AffineLine>> ricci;
  AffineLine scalar;
  AffineLine sec_min_above_one;  // sec minimum on the 1 < delta < 4/3 branch
};

BergerLines sample_lines(long n) {
  const Rational d1(1, 3), d2(1, 2);
  const CurvatureSummary s1 = closed_form_summary(ModelSpec::berger(static_cast<int>(n), d1));
  const CurvatureSummary s2 = closed_form_summary(ModelSpec::berger(static_cast<int>(n), d2));
  BergerLines out;
  auto match = [](const std::vector<SpectrumLine>& a, const std::vector<SpectrumLine>& b,
                  const Rational& da, const Rational& db) {
    std::vector<std::pair<long, AffineLine>> lines;
    for (const auto& la : a) {
      bool found = false;
      for (const auto& lb : b) {
        if (lb.multiplicity == la.multiplicity) {
          lines.emplace_back(la.multiplicity, fit(da, la.value, db, lb.value));
          found = true;
          break;
        }
      }
      if (!found) throw std::logic_error("berger line matching failed");
    }
    return lines;
  };
  out.spectrum = match(*s1.spectrum, *s2.spectrum, d1, d2);
  out.ricci = match(*s1.ricci, *s2.ricci, d1, d2);
  out.scalar = fit(d1, *s1.scalar, d2, *s2.scalar);

  // On 1 < delta < 4/3 the sectional minimum is an affine function of delta.
  const Rational e1(6, 5), e2(13, 10);
  const CurvatureSummary t1 = closed_form_summary(ModelSpec::berger(static_cast<int>(n), e1));
  const CurvatureSummary t2 = closed_form_summary(ModelSpec::berger(static_cast<int>(n), e2));
  out.sec_min_above_one = fit(e1, *t1.sec_min, e2, *t2.sec_min);
  return out;
}

/// Least positive root among the decreasing lines: the delta where the
/// smallest eigenvalue leaves the nonnegative range.
Rational nonneg_threshold(const std::vector<std::pair<long, AffineLine>>& lines) {
  std::optional<Rational> best;
  for (const auto& [mult, line] : lines) {
    if (line.slope < Rational(0)) {
      const Rational r = line.root();
      if (!best || r < *best) best = r;
    }
  }
  if (!best) throw std::logic_error("nonneg_threshold: no decreasing line");
  return *best;
}

}  // namespace

BergerThresholds berger_sphere_verdicts(long n) {
  if (n < 2) throw std::invalid_argument("berger_sphere_verdicts: requires n >= 2");
  const BergerLines lines = sample_lines(n);
  BergerThresholds t;
  t.n = n;

  t.spinor_delta_max = lines.scalar.root();
  t.curvop_delta_max = nonneg_threshold(lines.spectrum);
  t.ricci_delta_max = nonneg_threshold(lines.ricci);
  t.sec_delta_max = lines.sec_min_above_one.root();

  // delta > 1 pinching branch: a = sec_min(delta), b = delta. The p-form
  // route solves b = eps_{2n,n} a, the 2-form route b = c_{2n} a; their
  // delta < 1 mirror (a = delta, b = sec value through the same line)
  // solves 4 - 3 delta = c_{2n} delta.
  const AffineLine& am = lines.sec_min_above_one;  // a(delta) on the upper branch
  const Rational eps = epsilon_constant(2 * n, n);
  // b = delta <= eps * a(delta)  <=>  delta <= root of (delta - eps*a(delta))
  t.pform_pinch_delta_max = fit(Rational(0), Rational(0) - eps * am.eval(Rational(0)), Rational(1),
                                Rational(1) - eps * am.eval(Rational(1)))
                                .root();
  t.pform_delta_max = std::max(t.curvop_delta_max, t.pform_pinch_delta_max);

  const Rational c = c_constant(2 * n);
  t.two_form_delta_max =
      fit(Rational(0), Rational(0) - c * am.eval(Rational(0)), Rational(1),
          Rational(1) - c * am.eval(Rational(1)))
          .root();
  // Lower branch: a = delta, b = 4 - 3 delta; solve b = c * a.
  t.two_form_delta_min =
      fit(Rational(0), am.eval(Rational(0)) - c * Rational(0), Rational(1),
          am.eval(Rational(1)) - c * Rational(1))
          .root();

  t.notes.push_back("two_form_delta_min solves 4 - 3 delta = c_{2n} delta and equals 8(n-1)/(17n-14); "
                    "a commonly transcribed variant with denominator 17m-14 mixes up m and n");
  if (n < 6)
    t.notes.push_back("curvature-operator threshold exceeds the pinching solution (n < 6)");
  else if (n == 6)
    t.notes.push_back("curvature-operator threshold and pinching solution coincide at n = 6");
  else
    t.notes.push_back("pinching solution exceeds the curvature-operator threshold (n > 6)");
  return t;
}

std::vector<TheoremVerdict> berger_rows(long n, const Rational& delta,
                                        const PrincipalCurvatureProfile& profile, int p,
                                        const AnalysisFlags& flags) {
  const BergerThresholds t = berger_sphere_verdicts(n);
  const int m = 2 * static_cast<int>(n);
  if (profile.size() != m)
    throw std::invalid_argument("berger_rows: profile length must be 2n");
  std::vector<TheoremVerdict> out;

  {
    TheoremVerdict v;
    v.theorem_id = "BergerSphere1";
    v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
    v.hypotheses.push_back(hyp("minimal_H_zero", profile.is_minimal()));
    v.hypotheses.push_back(hyp("delta_positive", delta > Rational(0), Margin::of(delta), true));
    v.hypotheses.push_back(hyp("delta_le_spinor_threshold", delta <= t.spinor_delta_max,
                               Margin::of(t.spinor_delta_max - delta)));
    v.conclusion.kind = Conclusion::Kind::Vanishing;
    v.notes.push_back("conclusion concerns L2-harmonic spinors (no form degree)");
    finalize(v);
    out.push_back(std::move(v));
  }

  const int p_eff = std::min(p, m - p);
  if (p_eff >= 2) {
    const ConditionResult cond = profile.is_minimal()
                                     ? check_minimal_condition(profile, p_eff)
                                     : check_cmc_condition(profile, p_eff);
    {
      TheoremVerdict v;
      v.theorem_id = "BergerSphere2";
      v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
      v.hypotheses.push_back(hyp("minimal_H_zero", profile.is_minimal()));
      v.hypotheses.push_back(
          hyp("degree_in_2_to_n", p_eff <= n, Margin::of(Rational(n - p_eff))));
      v.hypotheses.push_back(hyp("delta_positive", delta > Rational(0), Margin::of(delta), true));
      v.hypotheses.push_back(hyp("delta_le_pform_threshold", delta <= t.pform_delta_max,
                                 Margin::of(t.pform_delta_max - delta)));
      v.hypotheses.push_back(hyp("minimal_multi_index_condition", cond.holds,
                                 Margin::of(cond.margin)));
      v.conclusion.kind = Conclusion::Kind::Vanishing;
      v.conclusion.degrees = {p_eff, m - p_eff};
      finalize(v);
      out.push_back(std::move(v));
    }
    if (p_eff == 2) {
      TheoremVerdict v;
      v.theorem_id = "BergerSphere3";
      v.hypotheses.push_back(flag_hyp("stability_asserted", flags.stability));
      v.hypotheses.push_back(hyp("minimal_H_zero", profile.is_minimal()));
      v.hypotheses.push_back(hyp("delta_ge_two_form_min", delta >= t.two_form_delta_min,
                                 Margin::of(delta - t.two_form_delta_min)));
      v.hypotheses.push_back(hyp("delta_le_two_form_max", delta <= t.two_form_delta_max,
                                 Margin::of(t.two_form_delta_max - delta)));
      v.hypotheses.push_back(hyp("minimal_multi_index_condition", cond.holds,
                                 Margin::of(cond.margin)));
      v.conclusion.kind = Conclusion::Kind::Vanishing;
      v.conclusion.degrees = {2, m - 2};
      v.notes = t.notes;
      finalize(v);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::vector<Figure1Row> figure1_data(long n_min, long n_max) {
  if (n_min < 2 || n_max < n_min || n_max > 64)
    throw std::invalid_argument("figure1_data: n range must lie inside [2, 64]");
  std::vector<Figure1Row> rows;
  for (long n = n_min; n <= n_max; ++n) {
    const BergerThresholds t = berger_sphere_verdicts(n);
    Figure1Row row;
    row.n = n;
    row.values = {
        {"two_form_min", t.two_form_delta_min},
        {"curv_op_nonneg_max", t.curvop_delta_max},
        {"pform_pinch_max", t.pform_pinch_delta_max},
        {"two_form_max", t.two_form_delta_max},
        {"sec_positive_max", t.sec_delta_max},
        {"ricci_positive_max", t.ricci_delta_max},
        {"scalar_nonneg_max", t.spinor_delta_max},
    };
    std::vector<std::size_t> order(row.values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return row.values[a].second < row.values[b].second;
    });
    for (std::size_t i : order) row.ascending_labels.push_back(row.values[i].first);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace curvgate
