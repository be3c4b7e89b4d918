#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvgate/chart.hpp"
#include "curvgate/rational.hpp"

namespace curvgate {

/// Ambient model space. Parameters are exact rationals so summaries can be
/// computed in exact arithmetic.
struct ModelSpec {
  enum class Kind { Euclidean, RoundSphere, BergerSphere, FubiniStudyCP, Product };

  Kind kind = Kind::Euclidean;
  int n = 0;                     ///< space dim for Euclidean/RoundSphere, complex n for Berger/CP
  Rational radius{1};            ///< sphere radius / Fubini-Study scale
  Rational delta{1};             ///< Berger parameter
  std::vector<ModelSpec> factors;

  static ModelSpec euclidean(int m);
  static ModelSpec sphere(int m, Rational r = Rational(1));
  static ModelSpec berger(int n, Rational delta);
  static ModelSpec fubini_study(int n, Rational scale = Rational(1));
  static ModelSpec product(std::vector<ModelSpec> factors);

  int dim() const;
  /// Canonical text form, e.g. "S3(r=1)xR2", "Berger(n=2,delta=6/5)".
  std::string text() const;
  /// Throws std::invalid_argument on invariant violations (delta <= 0,
  /// radius <= 0, Berger n < 2, ...).
  void validate() const;
};

/// Parses the canonical grammar: factors joined by 'x', parameters in
/// parentheses. "E4", "S3(r=1)xR2", "Berger(n=3,delta=1.1)", "CP2xR2".
/// Errors name the offending token and its position.
ModelSpec parse_model_spec(std::string_view text);

struct SpectrumLine {
  Rational value;
  long multiplicity = 0;

  friend bool operator==(const SpectrumLine&, const SpectrumLine&) = default;
};

/// Closed-form curvature data; absent members mean "numeric-only" (the
/// Fubini-Study factor carries no closed-form values here).
struct CurvatureSummary {
  int dim = 0;
  std::optional<Rational> sec_min, sec_max;
  std::optional<std::vector<SpectrumLine>> spectrum;  ///< curvature operator on bivectors
  std::optional<std::vector<SpectrumLine>> ricci;
  std::optional<Rational> scalar;
  std::optional<Rational> gamma;  ///< least curvature-operator eigenvalue
  std::vector<std::string> notes;

  friend bool operator==(const CurvatureSummary&, const CurvatureSummary&) = default;
};

CurvatureSummary closed_form_summary(const ModelSpec& spec);

/// Spectrum of a Riemannian product: union of the factor spectra plus the
/// zero eigenvalue on mixed bivectors. Any numeric-only factor makes the
/// result numeric-only (nullopt).
std::optional<std::vector<SpectrumLine>> product_spectrum(
    const std::vector<CurvatureSummary>& factors);

/// Coordinate chart covering a dense open set of the model.
MetricField chart(const ModelSpec& spec);

/// Deterministic interior sample points of the chart domain (splitmix64,
/// platform independent).
std::vector<ChartPoint> sample_points(const MetricField& field, int count, std::uint64_t seed);

/// Numeric cross-check of one model: curvature-operator spectrum (and Ricci
/// spectrum / scalar where a closed form exists) from the chart versus the
/// closed-form summary, at seeded sample points.
struct VerifyReport {
  bool ok = false;
  int points = 0;
  double max_spectrum_dev = 0.0;  ///< closed-form models
  double min_eigenvalue = 0.0;    ///< numeric-only models: PSD check
  double max_ricci_dev = 0.0;
  double max_scalar_dev = 0.0;
  std::string detail;
};

VerifyReport verify_model_numeric(const ModelSpec& spec, std::uint64_t seed, int points = 20,
                                  double tol = 1e-6);

/// Expands an eigenvalue/multiplicity list into an ascending list of doubles.
std::vector<double> expand_spectrum(const std::vector<SpectrumLine>& lines);

/// The model catalogue exercised by `verify-all` (section-3 style products
/// plus Berger and Fubini-Study charts).
std::vector<ModelSpec> shipped_catalogue();

}  // namespace curvgate
