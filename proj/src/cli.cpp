#include "pdlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "pdlab/gallery.hpp"
#include "pdlab/gram.hpp"

namespace pdlab::cli {

namespace {

double parse_number(std::string_view token, std::string_view flag) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw UsageError(std::string(flag) + ": malformed number '" + std::string(token) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view flag) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_number(text.substr(start, end - start), flag));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Registers a string-valued option whose value may begin with '-'.
CLI::Option* add_text(CLI::App* app, const std::string& name, std::string& target,
                      const std::string& help) {
  return app->add_option(name, target, help)->allow_extra_args(false);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig config;
  CLI::App app{"Verification laboratory for positive definite functions", "pdlab"};
  app.require_subcommand(1);

  std::string fn, ineq, x_text, y_text, domain_text, variant_text = "sin_lhs", format_text = "table";
  std::string theta_text, t_text, period_text, tol_text, points_path, out_path;
  int m = 1, budget = 10000, n = 0;
  std::uint64_t seed = 0;
  bool violation = false, limit = false, real_flag = false, normalize_flag = false;
  std::string scenario = "all";

  auto add_common = [&](CLI::App* sub) {
    add_text(sub, "--tol", tol_text, "absolute tolerance (default 1e-9)");
    sub->add_option("--seed", seed, "random seed");
    add_text(sub, "--format", format_text, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    add_text(sub, "--out", out_path, "output path (default stdout)");
  };
  auto add_function = [&](CLI::App* sub) {
    add_text(sub, "--fn", fn, "exp:a, cos, gauss, tent:c, const:c or measure:<path>");
    sub->add_flag("--real-part", real_flag, "use Re f");
    sub->add_flag("--normalize", normalize_flag, "divide by f(0)");
  };
  auto add_points = [&](CLI::App* sub) {
    add_text(sub, "--x", x_text, "comma-separated reals");
    add_text(sub, "--points", points_path, "file with one real per line");
  };

  auto* catalog = app.add_subcommand("catalog", "list functions or spot-check basic bounds");
  add_function(catalog);
  add_points(catalog);
  add_common(catalog);

  auto* certify_cmd = app.add_subcommand("certify", "PSD certificate of a Gram matrix");
  add_function(certify_cmd);
  add_points(certify_cmd);
  add_common(certify_cmd);

  auto* verify = app.add_subcommand("verify", "evaluate one inequality");
  add_text(verify, "--ineq", ineq, "inequality id")->required();
  add_function(verify);
  add_points(verify);
  add_text(verify, "--y", y_text, "comma-separated reals (second configuration)");
  add_text(verify, "--theta", theta_text, "angle of the unimodular scalar, radians");
  add_text(verify, "--t", t_text, "frequency for trig-cos-sum");
  add_text(verify, "--T", period_text, "quasi-period");
  verify->add_option("--m", m, "iteration count for linnik-iter/linnik-refined");
  add_text(verify, "--variant", variant_text, "sin_lhs or cos_lhs")
      ->check(CLI::IsMember({"sin_lhs", "cos_lhs"}));
  add_common(verify);

  auto* probe = app.add_subcommand("probe", "numerical search over configurations");
  add_text(probe, "--ineq", ineq, "inequality id");
  add_function(probe);
  add_text(probe, "--domain", domain_text, "lo,hi search interval per coordinate");
  probe->add_option("--budget", budget, "evaluation budget");
  probe->add_option("--n", n, "configuration length (violation mode)");
  probe->add_option("--m", m, "upper bound on m for linnik-iter/linnik-refined");
  add_text(probe, "--variant", variant_text, "sin_lhs or cos_lhs")
      ->check(CLI::IsMember({"sin_lhs", "cos_lhs"}));
  probe->add_flag("--violation", violation, "maximize -margin instead of lhs/rhs");
  probe->add_flag("--limit", limit, "ratio (1-u(2x))/(1-u(x)) along --x");
  add_text(probe, "--x", x_text, "decreasing x sequence for --limit");
  add_common(probe);

  auto* gallery = app.add_subcommand("gallery", "re-run the named examples");
  add_text(gallery, "--scenario", scenario, "tent-extension, parity-failures, cos-equality or all");
  add_common(gallery);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (catalog->parsed()) config.command = Command::catalog;
  if (certify_cmd->parsed()) config.command = Command::certify;
  if (verify->parsed()) config.command = Command::verify;
  if (probe->parsed()) config.command = Command::probe;
  if (gallery->parsed()) config.command = Command::gallery;

  if (!fn.empty()) {
    try {
      parse_function_spec(fn);
    } catch (const Error& e) {
      throw UsageError(std::string("--fn: ") + e.what());
    }
  }
  config.function_spec = fn;
  config.take_real_part = real_flag;
  config.normalize = normalize_flag;
  config.inequality = ineq;
  if (!ineq.empty() && !is_known_inequality(ineq)) {
    throw UsageError("--ineq: unknown inequality id '" + ineq + "'");
  }
  if (!x_text.empty()) config.xs = parse_list(x_text, "--x");
  if (!y_text.empty()) config.ys = parse_list(y_text, "--y");
  if (!points_path.empty()) config.points_path = points_path;
  if (!theta_text.empty()) config.theta = parse_number(theta_text, "--theta");
  if (!t_text.empty()) config.t = parse_number(t_text, "--t");
  if (!period_text.empty()) config.period = parse_number(period_text, "--T");
  config.m = m;
  config.variant = variant_text == "cos_lhs" ? TrigVariant::cos_lhs : TrigVariant::sin_lhs;
  config.scenario = scenario;
  config.seed = seed;
  config.budget = budget;
  config.format = output_format_from_string(format_text);
  if (!out_path.empty()) config.output_path = out_path;

  if (!tol_text.empty()) config.tolerance = parse_number(tol_text, "--tol");
  if (!(config.tolerance > 0.0)) throw UsageError("--tol: tolerance must be positive");
  if (config.budget < 1) throw UsageError("--budget: must be at least 1");
  if (m < 1) throw UsageError("--m: must be at least 1");

  switch (config.command) {
    case Command::catalog:
      break;
    case Command::certify:
      if (fn.empty()) throw UsageError("--fn: required for certify");
      if (config.xs.empty() && !config.points_path) {
        throw UsageError("--points: certify needs --points or --x");
      }
      break;
    case Command::verify:
      if (fn.empty() && ineq.rfind("trig-", 0) != 0) {
        throw UsageError("--fn: required for " + ineq);
      }
      if (ineq == ids::quasi_period && !config.period) {
        throw UsageError("--T: required for quasi-period");
      }
      if (config.xs.empty() && !config.points_path) {
        throw UsageError("--x: " + ineq + " needs --x or --points");
      }
      break;
    case Command::probe:
      if (fn.empty() && !(!ineq.empty() && ineq.rfind("trig-", 0) == 0)) {
        throw UsageError("--fn: required for probe");
      }
      config.probe_mode = limit       ? ProbeMode::limit
                          : violation ? ProbeMode::violation
                                      : ProbeMode::ratio;
      if (config.probe_mode != ProbeMode::limit && ineq.empty()) {
        throw UsageError("--ineq: required for probe");
      }
      if (config.probe_mode == ProbeMode::limit && config.xs.empty()) {
        throw UsageError("--x: --limit needs a decreasing x sequence");
      }
      if (config.probe_mode == ProbeMode::violation) {
        if (n < 1) throw UsageError("--n: violation search needs --n >= 1");
        config.n = n;
      } else if (n > 0) {
        config.n = n;
      }
      if (!domain_text.empty()) {
        const auto bounds = parse_list(domain_text, "--domain");
        if (bounds.size() != 2 || !(bounds[1] > bounds[0])) {
          throw UsageError("--domain: expected lo,hi with lo < hi");
        }
        config.domain = Interval{bounds[0], bounds[1]};
      }
      break;
    case Command::gallery:
      if (scenario != "all" &&
          std::find(std::begin(kScenarioIds), std::end(kScenarioIds), scenario) ==
              std::end(kScenarioIds)) {
        throw UsageError("--scenario: unknown scenario '" + scenario + "'");
      }
      break;
  }
  return config;
}

namespace {

PdFunction load_function(const RunConfig& config) {
  PdFunction f = make_function(config.function_spec);
  if (config.take_real_part) f = real_part(f);
  if (config.normalize) f = normalize(f);
  return f;
}

PointConfig load_points(const RunConfig& config) {
  if (config.points_path) return load_points_file(*config.points_path);
  return PointConfig(config.xs);
}

int run_catalog(const RunConfig& config, ReportWriter& writer, std::ostream& out) {
  if (config.function_spec.empty()) {
    out << "exp:a       exp(i a x)\n"
           "cos         cos(x)\n"
           "gauss       exp(-x^2)\n"
           "tent:c      max(c - |x|, 0), c > 0\n"
           "const:c     c, c >= 0\n"
           "measure:P   sum_j w_j exp(i t_j x) from JSON file P: [{\"atom\": t, \"weight\": w}]\n";
    return 0;
  }
  const PdFunction f = load_function(config);
  const PointConfig sample = config.xs.empty() && !config.points_path
                                 ? PointConfig(sample_window(config.seed))
                                 : load_points(config);
  int code = 0;
  for (const auto& r : check_basic_bounds(f, sample, config.tolerance)) {
    writer.write(r);
    if (r.expected_valid && !r.holds) code = 1;
  }
  return code;
}

int run_certify(const RunConfig& config, ReportWriter& writer) {
  const PsdCertificate cert = certify(load_function(config), load_points(config), config.tolerance);
  writer.write(cert);
  return cert.verdict == Verdict::refuted ? 1 : 0;
}

int run_verify(const RunConfig& config, ReportWriter& writer) {
  const PdFunction f =
      config.function_spec.empty() ? make_const(1.0) : load_function(config);
  std::vector<MarginReport> reports;
  if (config.inequality == ids::quasi_period) {
    reports = quasi_period_check(f, *config.period, UnimodularScalar(config.theta),
                                 load_points(config), config.tolerance);
  } else {
    InequalityArgs args;
    args.xs = load_points(config).to_vector();
    args.ys = config.ys;
    args.theta = config.theta;
    args.t = config.t;
    args.m = config.m;
    args.variant = config.variant;
    reports.push_back(evaluate(config.inequality, f, args, config.tolerance));
  }
  int code = 0;
  for (const auto& r : reports) {
    writer.write(r);
    if (r.expected_valid && !r.holds) code = 1;
  }
  return code;
}

int run_probe(const RunConfig& config, ReportWriter& writer) {
  const PdFunction f =
      config.function_spec.empty() ? make_const(1.0) : load_function(config);
  if (config.probe_mode == ProbeMode::limit) {
    for (const auto& entry : linnik_constant_probe(f, config.xs)) writer.write(entry);
    return 0;
  }
  ProbeOptions options =
      config.probe_mode == ProbeMode::violation ? violation_defaults() : ProbeOptions{};
  if (config.domain) options.domain = *config.domain;
  options.budget = config.budget;
  options.seed = config.seed;
  options.tolerance = config.tolerance;
  options.variant = config.variant;
  options.m_max = std::max(config.m, options.m_min);
  if (config.n && config.probe_mode == ProbeMode::ratio) {
    options.n_min = options.n_max = *config.n;
  }
  const ProbeResult result = config.probe_mode == ProbeMode::violation
                                 ? find_violation(config.inequality, f, *config.n, options)
                                 : probe_ratio(config.inequality, f, options);
  writer.write(result);
  const bool claimed = result.best_report && result.best_report->expected_valid;
  if (claimed && result.violation_found) return 1;
  return 0;
}

int run_gallery(const RunConfig& config, ReportWriter& writer) {
  int code = 0;
  for (std::string_view id : kScenarioIds) {
    if (config.scenario != "all" && config.scenario != id) continue;
    const ScenarioReport report = run_scenario(id, config.seed);
    writer.write(report);
    if (!report.passed()) code = 1;
  }
  return code;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (config.output_path) {
    file.open(*config.output_path);
    if (!file) {
      err << "pdlab: cannot open output file " << *config.output_path << '\n';
      return 2;
    }
    sink = &file;
  }
  ReportWriter writer(*sink, config.format);
  try {
    int code = 0;
    switch (config.command) {
      case Command::catalog:
        code = run_catalog(config, writer, *sink);
        break;
      case Command::certify:
        code = run_certify(config, writer);
        break;
      case Command::verify:
        code = run_verify(config, writer);
        break;
      case Command::probe:
        code = run_probe(config, writer);
        break;
      case Command::gallery:
        code = run_gallery(config, writer);
        break;
    }
    sink->flush();
    if (!*sink) {
      err << "pdlab: failed writing output\n";
      return 2;
    }
    return code;
  } catch (const Error& e) {
    err << "pdlab: " << e.what() << '\n';
    return 2;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run(parse_args(args), out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "pdlab: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pdlab::cli
