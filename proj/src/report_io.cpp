#include "pdlab/report_io.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

#include "pdlab/errors.hpp"

namespace pdlab {

using nlohmann::json;

OutputFormat output_format_from_string(std::string_view s) {
  if (s == "table") return OutputFormat::table;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw InvalidParameter("unknown output format '" + std::string(s) + "'");
}

std::string format_real(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

namespace {

json params_to_json(const std::vector<Param>& params) {
  json out = json::array();
  for (const auto& p : params) out.push_back({{"name", p.name}, {"values", p.values}});
  return out;
}

std::vector<Param> params_from_json(const json& j) {
  std::vector<Param> out;
  for (const auto& p : j) {
    out.push_back({p.at("name").get<std::string>(), p.at("values").get<std::vector<double>>()});
  }
  return out;
}

void expect_kind(const json& j, std::string_view kind) {
  if (!j.contains("kind") || j["kind"] != kind) {
    throw InvalidParameter("expected a '" + std::string(kind) + "' record");
  }
}

std::string join_inputs(const std::vector<Param>& params) {
  std::string out;
  for (std::size_t k = 0; k < params.size(); ++k) {
    if (k > 0) out += ';';
    out += params[k].name + '=';
    for (std::size_t i = 0; i < params[k].values.size(); ++i) {
      if (i > 0) out += '|';
      out += format_real(params[k].values[i]);
    }
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

json to_json(const MarginReport& r) {
  return {{"kind", "margin"},
          {"inequality_id", r.inequality_id},
          {"function", r.function},
          {"inputs", params_to_json(r.inputs)},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"margin", r.margin},
          {"holds", r.holds},
          {"expected_valid", r.expected_valid},
          {"tolerance", r.tolerance},
          {"note", r.note}};
}

MarginReport margin_report_from_json(const json& j) {
  expect_kind(j, "margin");
  MarginReport r;
  r.inequality_id = j.at("inequality_id").get<std::string>();
  r.function = j.at("function").get<std::string>();
  r.inputs = params_from_json(j.at("inputs"));
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.margin = j.at("margin").get<double>();
  r.holds = j.at("holds").get<bool>();
  r.expected_valid = j.at("expected_valid").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  r.note = j.value("note", "");
  return r;
}

json to_json(const PsdCertificate& c) {
  return {{"kind", "certificate"},
          {"n", c.n},
          {"hermitian_deviation", c.hermitian_deviation},
          {"min_eigenvalue", c.min_eigenvalue},
          {"tolerance", c.tolerance},
          {"verdict", std::string(to_string(c.verdict))}};
}

PsdCertificate certificate_from_json(const json& j) {
  expect_kind(j, "certificate");
  PsdCertificate c;
  c.n = j.at("n").get<Eigen::Index>();
  c.hermitian_deviation = j.at("hermitian_deviation").get<double>();
  c.min_eigenvalue = j.at("min_eigenvalue").get<double>();
  c.tolerance = j.at("tolerance").get<double>();
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  return c;
}

json to_json(const ProbeResult& p) {
  json j = {{"kind", "probe"},
            {"inequality_id", p.inequality_id},
            {"function", p.function},
            {"best_ratio", p.best_ratio},
            {"best_objective", p.best_objective},
            {"argmax_inputs", params_to_json(p.argmax_inputs)},
            {"evaluations", p.evaluations},
            {"guard_epsilon", p.guard_epsilon},
            {"degenerate", p.degenerate},
            {"violation_found", p.violation_found}};
  j["best_report"] = p.best_report ? to_json(*p.best_report) : json(nullptr);
  return j;
}

ProbeResult probe_result_from_json(const json& j) {
  expect_kind(j, "probe");
  ProbeResult p;
  p.inequality_id = j.at("inequality_id").get<std::string>();
  p.function = j.at("function").get<std::string>();
  p.best_ratio = j.at("best_ratio").get<double>();
  p.best_objective = j.at("best_objective").get<double>();
  p.argmax_inputs = params_from_json(j.at("argmax_inputs"));
  p.evaluations = j.at("evaluations").get<int>();
  p.guard_epsilon = j.at("guard_epsilon").get<double>();
  p.degenerate = j.at("degenerate").get<bool>();
  p.violation_found = j.at("violation_found").get<bool>();
  if (!j.at("best_report").is_null()) p.best_report = margin_report_from_json(j["best_report"]);
  return p;
}

json to_json(const ScenarioReport& s) {
  json assertions = json::array();
  for (const auto& a : s.assertions) {
    assertions.push_back({{"description", a.description},
                          {"observed", a.observed},
                          {"expected", a.expected},
                          {"pass", a.pass}});
  }
  return {{"kind", "scenario"},
          {"id", s.id},
          {"narrative", s.narrative},
          {"passed", s.passed()},
          {"assertions", assertions}};
}

ScenarioReport scenario_from_json(const json& j) {
  expect_kind(j, "scenario");
  ScenarioReport s;
  s.id = j.at("id").get<std::string>();
  s.narrative = j.at("narrative").get<std::string>();
  for (const auto& a : j.at("assertions")) {
    s.assertions.push_back({a.at("description").get<std::string>(), a.at("observed").get<double>(),
                            a.at("expected").get<double>(), a.at("pass").get<bool>()});
  }
  return s;
}

json to_json(const LimitRatio& l) {
  return {{"kind", "limit"}, {"x", l.x}, {"ratio", l.ratio}, {"skipped", l.skipped}};
}

std::string csv_row(const MarginReport& r) {
  std::string row = r.inequality_id;
  for (double v : {r.lhs, r.rhs, r.margin}) row += ',' + format_real(v);
  row += r.holds ? ",true" : ",false";
  row += r.expected_valid ? ",true" : ",false";
  row += ',' + format_real(r.tolerance);
  row += ',' + join_inputs(r.inputs);
  return row;
}

ReportWriter::ReportWriter(std::ostream& out, OutputFormat format)
    : out_(out), format_(format) {}

void ReportWriter::header(std::string_view kind, std::string_view csv_header,
                          std::string_view table_header) {
  if (last_kind_ == kind) return;
  last_kind_ = std::string(kind);
  if (format_ == OutputFormat::csv) out_ << csv_header << '\n';
  if (format_ == OutputFormat::table && !table_header.empty()) out_ << table_header << '\n';
}

void ReportWriter::write(const MarginReport& r) {
  if (format_ == OutputFormat::json) {
    out_ << to_json(r).dump() << '\n';
    return;
  }
  header("margin", kMarginCsvHeader,
         "inequality      function          lhs                      rhs                      "
         "margin                   holds expected inputs");
  if (format_ == OutputFormat::csv) {
    out_ << csv_row(r) << '\n';
    return;
  }
  out_ << std::left << std::setw(16) << r.inequality_id << std::setw(18) << r.function
       << std::setw(25) << format_real(r.lhs) << std::setw(25) << format_real(r.rhs)
       << std::setw(25) << format_real(r.margin) << std::setw(6) << yes_no(r.holds)
       << std::setw(9) << yes_no(r.expected_valid) << join_inputs(r.inputs) << '\n';
}

void ReportWriter::write(const PsdCertificate& c) {
  if (format_ == OutputFormat::json) {
    out_ << to_json(c).dump() << '\n';
    return;
  }
  header("certificate", "n,hermitian_deviation,min_eigenvalue,tolerance,verdict",
         "n     hermitian_deviation      min_eigenvalue           tolerance  verdict");
  if (format_ == OutputFormat::csv) {
    out_ << c.n << ',' << format_real(c.hermitian_deviation) << ','
         << format_real(c.min_eigenvalue) << ',' << format_real(c.tolerance) << ','
         << to_string(c.verdict) << '\n';
    return;
  }
  out_ << std::left << std::setw(6) << c.n << std::setw(25) << format_real(c.hermitian_deviation)
       << std::setw(25) << format_real(c.min_eigenvalue) << std::setw(11)
       << format_real(c.tolerance) << to_string(c.verdict) << '\n';
}

void ReportWriter::write(const ProbeResult& p) {
  if (format_ == OutputFormat::json) {
    out_ << to_json(p).dump() << '\n';
    return;
  }
  header("probe",
         "inequality_id,function,best_ratio,best_objective,evaluations,guard_epsilon,"
         "degenerate,violation_found,argmax_inputs",
         "inequality      function          best_ratio               best_objective           "
         "evals   degenerate violation argmax");
  if (format_ == OutputFormat::csv) {
    out_ << p.inequality_id << ',' << p.function << ',' << format_real(p.best_ratio) << ','
         << format_real(p.best_objective) << ',' << p.evaluations << ','
         << format_real(p.guard_epsilon) << ',' << (p.degenerate ? "true" : "false") << ','
         << (p.violation_found ? "true" : "false") << ',' << join_inputs(p.argmax_inputs)
         << '\n';
    return;
  }
  out_ << std::left << std::setw(16) << p.inequality_id << std::setw(18) << p.function
       << std::setw(25) << format_real(p.best_ratio) << std::setw(25)
       << format_real(p.best_objective) << std::setw(8) << p.evaluations << std::setw(11)
       << yes_no(p.degenerate) << std::setw(10) << yes_no(p.violation_found)
       << join_inputs(p.argmax_inputs) << '\n';
}

void ReportWriter::write(const ScenarioReport& s) {
  if (format_ == OutputFormat::json) {
    out_ << to_json(s).dump() << '\n';
    return;
  }
  header("scenario", "scenario,description,observed,expected,pass", "");
  if (format_ == OutputFormat::csv) {
    for (const auto& a : s.assertions) {
      out_ << s.id << ",\"" << a.description << "\"," << format_real(a.observed) << ','
           << format_real(a.expected) << ',' << (a.pass ? "true" : "false") << '\n';
    }
    return;
  }
  out_ << "[" << (s.passed() ? "PASS" : "FAIL") << "] " << s.id << ": " << s.narrative << '\n';
  for (const auto& a : s.assertions) {
    out_ << "    " << (a.pass ? "ok   " : "FAIL ") << a.description
         << "  observed=" << format_real(a.observed) << " expected=" << format_real(a.expected)
         << '\n';
  }
}

void ReportWriter::write(const LimitRatio& l) {
  if (format_ == OutputFormat::json) {
    out_ << to_json(l).dump() << '\n';
    return;
  }
  header("limit", "x,ratio,skipped", "x                        ratio                    skipped");
  if (format_ == OutputFormat::csv) {
    out_ << format_real(l.x) << ',' << format_real(l.ratio) << ','
         << (l.skipped ? "true" : "false") << '\n';
    return;
  }
  out_ << std::left << std::setw(25) << format_real(l.x) << std::setw(25) << format_real(l.ratio)
       << yes_no(l.skipped) << '\n';
}

}  // namespace pdlab
