#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvgate/model_spaces.hpp"
#include "curvgate/profile.hpp"
#include "curvgate/verdicts.hpp"

namespace curvgate {

inline constexpr const char* kToolName = "curvgate";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSeedEnvVar = "CURVGATE_SEED";

struct AnalysisRequest {
  std::optional<std::string> ambient_model;     ///< canonical model text
  std::optional<AmbientSummary> ambient_manual;  ///< or explicit bounds
  std::string profile_text;
  std::vector<int> degrees;
  AnalysisFlags flags;
  std::string format = "json";  ///< json | csv | md
  std::uint64_t seed = 0;
};

struct ConstantRow {
  long m = 0, p = 0;
  std::optional<Rational> epsilon;  ///< defined for m >= 6, 2 <= p <= m/2
  std::optional<Rational> c;        ///< defined for m >= 6
  std::optional<Rational> beta;     ///< sphere threshold, 2 <= p <= m-2
};

struct ReportDocument {
  std::string tool_name = kToolName;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  AnalysisRequest request;
  std::optional<CurvatureSummary> model_summary;
  AmbientSummary ambient;
  std::vector<Rational> profile_k;
  std::vector<TheoremVerdict> verdicts;
  std::vector<ConstantRow> constants;
  std::vector<std::string> notes;
};

bool operator==(const AnalysisRequest& a, const AnalysisRequest& b);
bool operator==(const ReportDocument& a, const ReportDocument& b);

/// Runs the whole gate for one request. Throws std::invalid_argument on
/// inconsistent requests (profile length vs ambient dimension, bad degree
/// lists, unparsable inputs).
ReportDocument analyze(const AnalysisRequest& request);

/// Canonical JSON (fixed key order; byte-identical for equal documents).
std::string to_json_string(const ReportDocument& doc, int indent = 2);
ReportDocument report_from_json(const std::string& json_text);

std::string render_report(const ReportDocument& doc, const std::string& format);

/// 12-significant-digit float rendering used in CSV output.
std::string format_float12(double v);

struct CmdResult {
  int exit_code = 0;
  std::string output;
};

CmdResult cmd_model(const std::string& spec_text, bool verify, const std::string& format,
                    std::uint64_t seed);
CmdResult cmd_analyze(const AnalysisRequest& request);
CmdResult cmd_constants(long m_min, long m_max, const std::vector<long>& degrees,
                        const std::string& format);
CmdResult cmd_figure1(long n_min, long n_max, const std::string& format);
CmdResult cmd_verify_all(std::uint64_t seed);

}  // namespace curvgate
