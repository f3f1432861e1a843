#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pdlab/gallery.hpp"
#include "pdlab/gram.hpp"
#include "pdlab/margin_report.hpp"
#include "pdlab/prober.hpp"

namespace pdlab {

enum class OutputFormat { table, json, csv };
OutputFormat output_format_from_string(std::string_view s);

/// Every record carries a "kind" field: margin, certificate, probe,
/// scenario or limit.
nlohmann::json to_json(const MarginReport& r);
nlohmann::json to_json(const PsdCertificate& c);
nlohmann::json to_json(const ProbeResult& p);
nlohmann::json to_json(const ScenarioReport& s);
nlohmann::json to_json(const LimitRatio& l);

MarginReport margin_report_from_json(const nlohmann::json& j);
PsdCertificate certificate_from_json(const nlohmann::json& j);
ProbeResult probe_result_from_json(const nlohmann::json& j);
ScenarioReport scenario_from_json(const nlohmann::json& j);

/// %.17g: round-trips every finite double.
std::string format_real(double v);

inline constexpr std::string_view kMarginCsvHeader =
    "inequality_id,lhs,rhs,margin,holds,expected_valid,tolerance,inputs";
/// Inputs are written as name=v1|v2|...;name=...
std::string csv_row(const MarginReport& r);

/// Streams records in one format. JSON is one object per line; CSV emits a
/// header whenever the record kind changes; table is for humans.
class ReportWriter {
 public:
  ReportWriter(std::ostream& out, OutputFormat format);

  void write(const MarginReport& r);
  void write(const PsdCertificate& c);
  void write(const ProbeResult& p);
  void write(const ScenarioReport& s);
  void write(const LimitRatio& l);

 private:
  void header(std::string_view kind, std::string_view csv_header,
              std::string_view table_header);

  std::ostream& out_;
  OutputFormat format_;
  std::string last_kind_;
};

}  // namespace pdlab
