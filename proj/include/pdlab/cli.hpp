#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/errors.hpp"
#include "pdlab/inequalities.hpp"
#include "pdlab/prober.hpp"
#include "pdlab/report_io.hpp"

namespace pdlab::cli {

enum class Command { catalog, certify, verify, probe, gallery };

/// Bad command line; the message names the offending flag. Exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// --help was requested; what() holds the help text. Exit code 0.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

enum class ProbeMode { ratio, violation, limit };

struct RunConfig {
  Command command = Command::catalog;
  std::string function_spec;
  std::string inequality;
  std::vector<double> xs;
  std::vector<double> ys;
  std::optional<std::string> points_path;
  double theta = 0.0;
  double t = 1.0;
  std::optional<double> period;
  int m = 1;
  TrigVariant variant = TrigVariant::sin_lhs;
  bool take_real_part = false;
  bool normalize = false;

  ProbeMode probe_mode = ProbeMode::ratio;
  std::optional<int> n;
  std::optional<Interval> domain;

  std::string scenario = "all";

  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 0;
  int budget = 10000;
  OutputFormat format = OutputFormat::table;
  std::optional<std::string> output_path;
};

/// `args` excludes the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

/// Exit codes: 0 all claimed inequalities hold, certificates not refuted and
/// scenarios pass; 1 a claimed inequality is violated, a certificate is
/// refuted or a scenario fails; 2 usage, input or I/O error (message on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code mapping above.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdlab::cli
