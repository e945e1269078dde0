#pragma once

#include <json.hpp>
#include <string>

#include "folint/cli/parser.hpp"
#include "folint/integrate/pipeline.hpp"

namespace folint {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "folint-report/1";

enum class ReportFormat { Json, Text };

/// Echo of the parsed input file.
Json input_json(const FoliationFile& file);

Json point_json(const SingularClass& c);
Json locus_json(const SingularLocus& locus, int r);
Json cluster_json(const Cluster& c);

Json analyze_report(const FoliationFile& file, const Foliation& f, const SingularLocus& locus);

/// Full integrate report; timings only when `timings` is set.
Json integrate_report(const FoliationFile& file, const IntegrabilityReport& rep, bool timings);

Json certify_report(const FoliationFile& file, const QMultiPoly& F, const QMultiPoly& G, const WedgeOutcome& w);

struct GermQuery {
  KMultiPoly f;
  std::string text;                       // as given, with factors joined by " * "
  std::optional<std::array<long, 3>> s_type;  // (a, b, k)
  int jet_cap = kGermJetCap;
};
Json germ_report(const GermQuery& q);

/// Report for a failed command.
Json error_report(const std::string& command, const Error& e);

/// 0 FirstIntegral or ProvenNo, 2 NoBelowBound, 4 Unsupported.
int exit_code(Verdict v);
/// 3 for malformed input, 4 otherwise.
int exit_code(ErrorKind kind);

/// JSON with two-space indentation, or an indented key: value listing
/// carrying the same content. Ends with a newline.
std::string render_report(const Json& report, ReportFormat format);

}  // namespace folint
