#include "curvgate/model_spaces.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "curvgate/curvature.hpp"

namespace curvgate {

ModelSpec ModelSpec::euclidean(int m) {
  ModelSpec s;
  s.kind = Kind::Euclidean;
  s.n = m;
  s.validate();
  return s;
}

ModelSpec ModelSpec::sphere(int m, Rational r) {
  ModelSpec s;
  s.kind = Kind::RoundSphere;
  s.n = m;
  s.radius = r;
  s.validate();
  return s;
}

ModelSpec ModelSpec::berger(int n, Rational delta) {
  ModelSpec s;
  s.kind = Kind::BergerSphere;
  s.n = n;
  s.delta = delta;
  s.validate();
  return s;
}

ModelSpec ModelSpec::fubini_study(int n, Rational scale) {
  ModelSpec s;
  s.kind = Kind::FubiniStudyCP;
  s.n = n;
  s.radius = scale;
  s.validate();
  return s;
}

ModelSpec ModelSpec::product(std::vector<ModelSpec> factors) {
  std::vector<ModelSpec> flat;
  for (auto& f : factors) {
    if (f.kind == Kind::Product)
      flat.insert(flat.end(), f.factors.begin(), f.factors.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.size() == 1) return flat.front();
  ModelSpec s;
  s.kind = Kind::Product;
  s.factors = std::move(flat);
  s.validate();
  return s;
}

int ModelSpec::dim() const {
  switch (kind) {
    case Kind::Euclidean:
    case Kind::RoundSphere: return n;
    case Kind::BergerSphere: return 2 * n + 1;
    case Kind::FubiniStudyCP: return 2 * n;
    case Kind::Product: {
      int d = 0;
      for (const auto& f : factors) d += f.dim();
      return d;
    }
  }
  return 0;
}

void ModelSpec::validate() const {
  switch (kind) {
    case Kind::Euclidean:
      if (n < 1) throw std::invalid_argument("ModelSpec: Euclidean dimension must be >= 1");
      break;
    case Kind::RoundSphere:
      if (n < 1) throw std::invalid_argument("ModelSpec: sphere dimension must be >= 1");
      if (radius.sign() <= 0) throw std::invalid_argument("ModelSpec: sphere radius must be > 0");
      break;
    case Kind::BergerSphere:
      if (n < 2) throw std::invalid_argument("ModelSpec: Berger sphere needs n >= 2");
      if (delta.sign() <= 0) throw std::invalid_argument("ModelSpec: Berger delta must be > 0");
      break;
    case Kind::FubiniStudyCP:
      if (n < 1) throw std::invalid_argument("ModelSpec: CP^n needs n >= 1");
      if (radius.sign() <= 0) throw std::invalid_argument("ModelSpec: CP scale must be > 0");
      break;
    case Kind::Product:
      if (factors.size() < 2)
        throw std::invalid_argument("ModelSpec: product needs at least two factors");
      for (const auto& f : factors) {
        if (f.kind == Kind::Product)
          throw std::invalid_argument("ModelSpec: nested products must be flattened");
        f.validate();
      }
      break;
  }
}

namespace {

std::string factor_text(const ModelSpec& s, bool in_product) {
  std::ostringstream os;
  switch (s.kind) {
    case ModelSpec::Kind::Euclidean:
      os << (in_product ? "R" : "E") << s.n;
      break;
    case ModelSpec::Kind::RoundSphere:
      os << "S" << s.n << "(r=" << s.radius.str() << ")";
      break;
    case ModelSpec::Kind::BergerSphere:
      os << "Berger(n=" << s.n << ",delta=" << s.delta.str() << ")";
      break;
    case ModelSpec::Kind::FubiniStudyCP:
      os << "CP" << s.n;
      if (s.radius != Rational(1)) os << "(s=" << s.radius.str() << ")";
      break;
    case ModelSpec::Kind::Product: {
      bool first = true;
      for (const auto& f : s.factors) {
        if (!first) os << "x";
        os << factor_text(f, true);
        first = false;
      }
      break;
    }
  }
  return os.str();
}

}  // namespace

std::string ModelSpec::text() const { return factor_text(*this, false); }

// ---------------------------------------------------------------------------
// Parser

namespace {

class SpecParser {
public:
  explicit SpecParser(std::string_view s) : s_(s) {}

  ModelSpec parse() {
    std::vector<ModelSpec> factors;
    factors.push_back(parse_factor());
    while (pos_ < s_.size()) {
      if (s_[pos_] != 'x') fail("expected 'x' between factors, got", token_at(pos_));
      ++pos_;
      factors.push_back(parse_factor());
    }
    if (factors.size() == 1) return factors.front();
    return ModelSpec::product(std::move(factors));
  }

private:
  [[noreturn]] void fail(const std::string& what, const std::string& tok) const {
    throw std::invalid_argument("model spec parse error at position " + std::to_string(pos_) +
                                ": " + what + " '" + tok + "'");
  }

  std::string token_at(std::size_t at) const {
    std::size_t end = at;
    while (end < s_.size() && s_[end] != 'x' && s_[end] != ',' && s_[end] != '(' &&
           s_[end] != ')' && s_[end] != '=')
      ++end;
    if (end == at && at < s_.size()) end = at + 1;
    return std::string(s_.substr(at, end - at));
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != 'x')
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int read_int() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer, got", token_at(start));
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Rational read_rational_value() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
    const std::string tok(s_.substr(start, pos_ - start));
    try {
      return Rational::parse(tok);
    } catch (const std::exception&) {
      fail("expected a number, got", tok);
    }
  }

  /// Parses "(key=value,key=value)". Returns (key, value-as-string-pos) pairs.
  std::vector<std::pair<std::string, Rational>> read_params() {
    std::vector<std::pair<std::string, Rational>> out;
    if (pos_ >= s_.size() || s_[pos_] != '(') return out;
    ++pos_;
    while (true) {
      const std::string key = read_name();
      if (key.empty()) fail("expected a parameter name, got", token_at(pos_));
      if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' after", key);
      ++pos_;
      out.emplace_back(key, read_rational_value());
      if (pos_ >= s_.size()) fail("unterminated parameter list, got", token_at(pos_));
      if (s_[pos_] == ',') { ++pos_; continue; }
      if (s_[pos_] == ')') { ++pos_; break; }
      fail("expected ',' or ')', got", token_at(pos_));
    }
    return out;
  }

  ModelSpec parse_factor() {
    const std::size_t start = pos_;
    const std::string name = read_name();
    if (name.empty()) fail("expected a space name, got", token_at(start));

    if (name == "Berger") {
      auto params = read_params();
      int n = -1;
      Rational delta(1);
      bool have_delta = false;
      for (auto& [k, v] : params) {
        if (k == "n") {
          if (v.den() != 1) fail("Berger n must be an integer, got", v.str());
          n = static_cast<int>(v.num());
        } else if (k == "delta") {
          delta = v;
          have_delta = true;
        } else {
          fail("unknown Berger parameter", k);
        }
      }
      if (n < 0 || !have_delta) fail("Berger needs n and delta, got", name);
      return ModelSpec::berger(n, delta);
    }
    if (name == "CP") {
      const int n = read_int();
      Rational scale(1);
      for (auto& [k, v] : read_params()) {
        if (k == "s") scale = v;
        else fail("unknown CP parameter", k);
      }
      return ModelSpec::fubini_study(n, scale);
    }
    if (name == "S") {
      const int m = read_int();
      Rational r(1);
      for (auto& [k, v] : read_params()) {
        if (k == "r") r = v;
        else fail("unknown sphere parameter", k);
      }
      return ModelSpec::sphere(m, r);
    }
    if (name == "E" || name == "R") {
      const int m = read_int();
      if (pos_ < s_.size() && s_[pos_] == '(') fail("Euclidean factor takes no parameters, got", token_at(pos_));
      return ModelSpec::euclidean(m);
    }
    pos_ = start;
    fail("unknown space name", token_at(start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ModelSpec parse_model_spec(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("model spec parse error: empty input");
  SpecParser p(text);
  return p.parse();
}

// ---------------------------------------------------------------------------
// Closed-form summaries

namespace {

std::vector<SpectrumLine> merge_lines(std::vector<SpectrumLine> lines) {
  std::sort(lines.begin(), lines.end(),
            [](const SpectrumLine& a, const SpectrumLine& b) { return a.value < b.value; });
  std::vector<SpectrumLine> out;
  for (const auto& l : lines) {
    if (l.multiplicity == 0) continue;
    if (!out.empty() && out.back().value == l.value)
      out.back().multiplicity += l.multiplicity;
    else
      out.push_back(l);
  }
  return out;
}

std::optional<Rational> min_value(const std::optional<std::vector<SpectrumLine>>& lines) {
  if (!lines || lines->empty()) return std::nullopt;
  return lines->front().value;  // merge_lines sorts ascending
}

}  // namespace

CurvatureSummary closed_form_summary(const ModelSpec& spec) {
  spec.validate();
  CurvatureSummary cs;
  cs.dim = spec.dim();
  const int m = cs.dim;
  switch (spec.kind) {
    case ModelSpec::Kind::Euclidean: {
      cs.spectrum = merge_lines({{Rational(0), static_cast<long>(m) * (m - 1) / 2}});
      cs.ricci = merge_lines({{Rational(0), m}});
      cs.scalar = Rational(0);
      if (m >= 2) {
        cs.sec_min = Rational(0);
        cs.sec_max = Rational(0);
      }
      break;
    }
    case ModelSpec::Kind::RoundSphere: {
      if (m == 1) {
        cs.spectrum = std::vector<SpectrumLine>{};
        cs.ricci = merge_lines({{Rational(0), 1}});
        cs.scalar = Rational(0);
        break;
      }
      const Rational k = Rational(1) / (spec.radius * spec.radius);
      cs.spectrum = merge_lines({{k, static_cast<long>(m) * (m - 1) / 2}});
      cs.ricci = merge_lines({{Rational(m - 1) * k, m}});
      cs.scalar = Rational(m) * Rational(m - 1) * k;
      cs.sec_min = k;
      cs.sec_max = k;
      break;
    }
    case ModelSpec::Kind::BergerSphere: {
      const int n = spec.n;
      const Rational d = spec.delta;
      const Rational secs[3] = {d, Rational(4) - Rational(3) * d, Rational(1)};
      cs.sec_min = std::min({secs[0], secs[1], secs[2]});
      cs.sec_max = std::max({secs[0], secs[1], secs[2]});
      cs.spectrum = merge_lines({{d, static_cast<long>(n) * (n + 1)},
                                 {Rational(2) - d, static_cast<long>(n) * n - 1},
                                 {Rational(2 * n + 2) - Rational(2 * n + 1) * d, 1}});
      cs.ricci = merge_lines({{Rational(2 * n) * d, 1},
                              {Rational(2 * n + 2) - Rational(2) * d, 2 * n}});
      cs.scalar = Rational(2 * n) * (Rational(2 * n + 2) - d);
      if (d >= Rational(4, 3))
        cs.notes.push_back("mixed-sign sectional curvature: delta >= 4/3");
      break;
    }
    case ModelSpec::Kind::FubiniStudyCP: {
      cs.notes.push_back(
          "Fubini-Study factor: curvature data numeric-only; chart verification asserts a "
          "nonnegative curvature operator");
      break;
    }
    case ModelSpec::Kind::Product: {
      std::vector<CurvatureSummary> fs;
      fs.reserve(spec.factors.size());
      for (const auto& f : spec.factors) fs.push_back(closed_form_summary(f));
      cs.spectrum = product_spectrum(fs);

      bool all_ricci = true, all_scalar = true;
      std::vector<SpectrumLine> ric;
      Rational scal(0);
      for (const auto& f : fs) {
        if (!f.ricci) all_ricci = false;
        else ric.insert(ric.end(), f.ricci->begin(), f.ricci->end());
        if (!f.scalar) all_scalar = false;
        else scal += *f.scalar;
        cs.notes.insert(cs.notes.end(), f.notes.begin(), f.notes.end());
      }
      if (all_ricci) cs.ricci = merge_lines(std::move(ric));
      if (all_scalar) cs.scalar = scal;

      // Mixed planes across factors are flat, so 0 enters the sectional range.
      bool sec_known = true;
      std::vector<Rational> mins{Rational(0)}, maxs{Rational(0)};
      for (const auto& f : fs) {
        if (f.dim < 2) continue;
        if (!f.sec_min || !f.sec_max) { sec_known = false; break; }
        mins.push_back(*f.sec_min);
        maxs.push_back(*f.sec_max);
      }
      if (sec_known) {
        cs.sec_min = *std::min_element(mins.begin(), mins.end());
        cs.sec_max = *std::max_element(maxs.begin(), maxs.end());
      }
      break;
    }
  }
  cs.gamma = min_value(cs.spectrum);
  return cs;
}

std::optional<std::vector<SpectrumLine>> product_spectrum(
    const std::vector<CurvatureSummary>& factors) {
  std::vector<SpectrumLine> lines;
  long mixed = 0;
  long total = 0;
  for (const auto& f : factors) {
    if (!f.spectrum) return std::nullopt;
    lines.insert(lines.end(), f.spectrum->begin(), f.spectrum->end());
    mixed += total * f.dim;
    total += f.dim;
  }
  if (mixed > 0) lines.push_back({Rational(0), mixed});
  return merge_lines(std::move(lines));
}

std::vector<double> expand_spectrum(const std::vector<SpectrumLine>& lines) {
  std::vector<double> out;
  for (const auto& l : lines)
    for (long i = 0; i < l.multiplicity; ++i) out.push_back(l.value.to_double());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Charts

namespace {

MetricField euclidean_chart(const ModelSpec& spec) {
  const int m = spec.dim();
  return MetricField(m, Box::cube(m, 10.0), spec.text(), [m](auto xs, auto& out) {
    using T = std::remove_cvref_t<decltype(xs[0])>;
    (void)xs;
    for (int i = 0; i < m; ++i) out(i, i) = T(1.0);
  });
}

/// Stereographic chart of the round sphere of radius r: the pullback metric
/// is conformally flat, 4 r^2 / (1+|u|^2)^2 * Id.
MetricField sphere_chart(const ModelSpec& spec) {
  const int m = spec.dim();
  const double r2 = spec.radius.to_double() * spec.radius.to_double();
  return MetricField(m, Box::cube(m, 0.9), spec.text(), [m, r2](auto xs, auto& out) {
    using T = std::remove_cvref_t<decltype(xs[0])>;
    T s{};
    for (int i = 0; i < m; ++i) s += xs[i] * xs[i];
    const T w = T(1.0) + s;
    const T c = T(4.0 * r2) / (w * w);
    for (int i = 0; i < m; ++i) out(i, i) = c;
  });
}

/// Berger metric through the stereographic chart of S^{2n+1} in C^{n+1}:
/// g = sigma + (delta-1) eta (x) eta, where eta_i = <d_i Phi, J Phi> pulls
/// back the dual of the Reeb field.
MetricField berger_chart(const ModelSpec& spec) {
  const int m = 2 * spec.n + 1;
  const int amb = m + 1;
  const double dm1 = spec.delta.to_double() - 1.0;
  return MetricField(m, Box::cube(m, 0.9), spec.text(), [m, amb, dm1](auto xs, auto& out) {
    using T = std::remove_cvref_t<decltype(xs[0])>;
    T s{};
    for (int i = 0; i < m; ++i) s += xs[i] * xs[i];
    const T w = T(1.0) + s;
    const T w2 = w * w;

    std::vector<T> phi(amb);
    for (int k = 0; k < m; ++k) phi[k] = T(2.0) * xs[k] / w;
    phi[m] = (T(1.0) - s) / w;

    std::vector<T> jphi(amb);
    for (int t = 0; t < amb / 2; ++t) {
      jphi[2 * t] = -phi[2 * t + 1];
      jphi[2 * t + 1] = phi[2 * t];
    }

    // eta_i = sum_K d_i Phi_K (J Phi)_K with
    //   d_i Phi_k = 2 delta_ik / w - 4 u_k u_i / w^2  (k < m)
    //   d_i Phi_m = -4 u_i / w^2
    std::vector<T> eta(m);
    for (int i = 0; i < m; ++i) {
      T e = T(2.0) * jphi[i] / w;
      T dot{};
      for (int k = 0; k < m; ++k) dot += xs[k] * jphi[k];
      e -= T(4.0) * xs[i] * dot / w2;
      e -= T(4.0) * xs[i] * jphi[m] / w2;
      eta[i] = e;
    }

    const T conf = T(4.0) / w2;
    for (int i = 0; i < m; ++i) {
      out(i, i) = conf + T(dm1) * eta[i] * eta[i];
      for (int j = i + 1; j < m; ++j) {
        const T v = T(dm1) * eta[i] * eta[j];
        out(i, j) = v;
        out(j, i) = v;
      }
    }
  });
}

/// Fubini-Study metric in inhomogeneous coordinates (x_1,y_1,...,x_n,y_n),
/// z_k = x_k + i y_k, from the Kaehler potential log(1+|z|^2).
MetricField fubini_study_chart(const ModelSpec& spec) {
  const int n = spec.n;
  const int m = 2 * n;
  const double s2 = spec.radius.to_double() * spec.radius.to_double();
  return MetricField(m, Box::cube(m, 0.9), spec.text(), [n, s2](auto xs, auto& out) {
    using T = std::remove_cvref_t<decltype(xs[0])>;
    auto X = [&](int i) { return xs[2 * i]; };
    auto Y = [&](int i) { return xs[2 * i + 1]; };
    T S = T(1.0);
    for (int i = 0; i < n; ++i) S += X(i) * X(i) + Y(i) * Y(i);
    const T S2 = S * S;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        T re = -(X(i) * X(j) + Y(i) * Y(j));
        if (i == j) re += S;
        re = re / S2;
        const T im = -(X(i) * Y(j) - Y(i) * X(j)) / S2;
        // g = 2 Re(h_{i jbar} dz_i dzbar_j), scaled by s^2
        out(2 * i, 2 * j) = T(2.0 * s2) * re;
        out(2 * i + 1, 2 * j + 1) = T(2.0 * s2) * re;
        out(2 * i, 2 * j + 1) = T(2.0 * s2) * im;
        out(2 * j + 1, 2 * i) = T(2.0 * s2) * im;
      }
    }
  });
}

MetricField product_chart(const ModelSpec& spec) {
  auto fields = std::make_shared<std::vector<MetricField>>();
  std::vector<int> offsets;
  Box box;
  int off = 0;
  for (const auto& f : spec.factors) {
    fields->push_back(chart(f));
    offsets.push_back(off);
    const Box& fb = fields->back().domain();
    box.lo.insert(box.lo.end(), fb.lo.begin(), fb.lo.end());
    box.hi.insert(box.hi.end(), fb.hi.begin(), fb.hi.end());
    off += f.dim();
  }
  const int m = off;
  return MetricField(m, std::move(box), spec.text(),
                     [fields, offsets](auto xs, auto& out) {
                       using T = std::remove_cvref_t<decltype(xs[0])>;
                       for (std::size_t f = 0; f < fields->size(); ++f) {
                         const MetricField& mf = (*fields)[f];
                         const int o = offsets[f];
                         const int d = mf.dim();
                         const Mat<T> block = mf.eval<T>(xs.subspan(o, d));
                         for (int i = 0; i < d; ++i)
                           for (int j = 0; j < d; ++j) out(o + i, o + j) = block(i, j);
                       }
                     });
}

}  // namespace

MetricField chart(const ModelSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case ModelSpec::Kind::Euclidean: return euclidean_chart(spec);
    case ModelSpec::Kind::RoundSphere: return sphere_chart(spec);
    case ModelSpec::Kind::BergerSphere: return berger_chart(spec);
    case ModelSpec::Kind::FubiniStudyCP: return fubini_study_chart(spec);
    case ModelSpec::Kind::Product: return product_chart(spec);
  }
  throw std::logic_error("chart: unreachable");
}

// ---------------------------------------------------------------------------
// Sampling and numeric verification

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<ChartPoint> sample_points(const MetricField& field, int count, std::uint64_t seed) {
  std::uint64_t state = seed;
  std::vector<ChartPoint> pts;
  pts.reserve(count);
  const Box& b = field.domain();
  for (int k = 0; k < count; ++k) {
    ChartPoint p;
    p.chart_id = field.name();
    p.coords.resize(field.dim());
    for (int i = 0; i < field.dim(); ++i) {
      const double u = 0.05 + 0.9 * unit_double(state);  // stay interior
      p.coords[i] = b.lo[i] + u * (b.hi[i] - b.lo[i]);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

VerifyReport verify_model_numeric(const ModelSpec& spec, std::uint64_t seed, int points,
                                  double tol) {
  const MetricField field = chart(spec);
  const CurvatureSummary cs = closed_form_summary(spec);
  VerifyReport rep;
  rep.points = points;
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();

  std::vector<double> expected_spec, expected_ric;
  if (cs.spectrum) expected_spec = expand_spectrum(*cs.spectrum);
  if (cs.ricci) expected_ric = expand_spectrum(*cs.ricci);

  for (const ChartPoint& p : sample_points(field, points, seed)) {
    const Mat<double> g = field.components(p);
    const RiemannTensor ron = to_orthonormal(riemann(field, p), g);
    const Mat<double> id = Mat<double>::identity(field.dim());

    const CurvatureOperatorMatrix op = curvature_operator(ron, id);
    const std::vector<double> ev = sym_eigenvalues(op.matrix);
    if (!ev.empty()) rep.min_eigenvalue = std::min(rep.min_eigenvalue, ev.front());
    if (cs.spectrum) {
      if (ev.size() != expected_spec.size())
        throw std::logic_error("verify_model_numeric: spectrum size mismatch");
      for (std::size_t i = 0; i < ev.size(); ++i)
        rep.max_spectrum_dev = std::max(rep.max_spectrum_dev, std::abs(ev[i] - expected_spec[i]));
    }

    const RicciScalar rs = ricci_and_scalar(ron, id);
    if (cs.ricci) {
      const std::vector<double> rev = sym_eigenvalues(rs.ricci);
      for (std::size_t i = 0; i < rev.size(); ++i)
        rep.max_ricci_dev = std::max(rep.max_ricci_dev, std::abs(rev[i] - expected_ric[i]));
    }
    if (cs.scalar)
      rep.max_scalar_dev =
          std::max(rep.max_scalar_dev, std::abs(rs.scalar - cs.scalar->to_double()));
  }

  std::ostringstream os;
  if (cs.spectrum) {
    rep.ok = rep.max_spectrum_dev <= tol && rep.max_ricci_dev <= tol && rep.max_scalar_dev <= tol;
    os << spec.text() << ": max spectrum dev " << rep.max_spectrum_dev << ", ricci dev "
       << rep.max_ricci_dev << ", scalar dev " << rep.max_scalar_dev << " over " << points
       << " points";
  } else {
    rep.ok = rep.min_eigenvalue >= -1e-8;
    os << spec.text() << ": numeric-only; min curvature-operator eigenvalue "
       << rep.min_eigenvalue << " over " << points << " points";
  }
  rep.detail = os.str();
  return rep;
}

std::vector<ModelSpec> shipped_catalogue() {
  using MS = ModelSpec;
  std::vector<ModelSpec> out;
  out.push_back(MS::euclidean(4));
  out.push_back(MS::sphere(5));
  out.push_back(MS::sphere(3, Rational(2)));
  out.push_back(MS::product({MS::sphere(2), MS::euclidean(3)}));
  out.push_back(MS::product({MS::sphere(3), MS::euclidean(2)}));
  out.push_back(MS::product({MS::sphere(2), MS::sphere(2, Rational(2))}));
  out.push_back(MS::product({MS::sphere(2), MS::sphere(3)}));
  out.push_back(MS::berger(2, Rational(1, 2)));
  out.push_back(MS::berger(2, Rational(1)));
  out.push_back(MS::berger(2, Rational(6, 5)));
  out.push_back(MS::berger(2, Rational(3, 2)));
  out.push_back(MS::berger(3, Rational(6, 5)));
  out.push_back(MS::fubini_study(2));
  out.push_back(MS::product({MS::fubini_study(2), MS::euclidean(2)}));
  return out;
}

}  // namespace curvgate
