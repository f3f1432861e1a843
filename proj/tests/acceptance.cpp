// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "pdlab/gallery.hpp"
#include "pdlab/gram.hpp"
#include "pdlab/inequalities.hpp"
#include "pdlab/prober.hpp"
#include "pdlab/report_io.hpp"

using namespace pdlab;
using std::numbers::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << number << ": " << title;
  if (!o.detail.empty()) std::cout << " [" << o.detail << "]";
  std::cout << std::endl;
}

std::string fmt(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.3g", v);
  return buffer;
}

Outcome property_suite() {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240601);
  long checked = 0;
  double worst = INFINITY;
  std::string worst_where;
  auto record = [&](const MarginReport& r) {
    if (!r.expected_valid) return;
    ++checked;
    if (r.margin < worst) {
      worst = r.margin;
      worst_where = r.inequality_id + " on " + r.function;
    }
  };
  for (const auto& f : testing::catalog()) {
    for (auto id : ids::all) {
      if (id == ids::quasi_period) continue;
      const PdFunction g = testing::adapt_for(id, f);
      for (int trial = 0; trial < 10000; ++trial) record(testing::random_report(id, g, rng));
    }
    for (int k = 1; k <= 4; ++k) {
      double period = 0.0, theta = 0.0;
      if (!testing::quasi_period_for(f, k, period, theta)) continue;
      const PointConfig sample(testing::uniform_points(rng, 2500, -10.0, 10.0));
      for (const auto& r : quasi_period_check(f, period, UnimodularScalar(theta), sample)) {
        record(r);
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = worst >= -1e-9 && seconds < 60.0;
  return {pass, std::to_string(checked) + " claimed reports, worst margin " + fmt(worst) + " (" +
                    worst_where + "), " + fmt(seconds) + " s"};
}

Outcome psd_certification() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(1, 12);
  int certified = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PointConfig pts(testing::uniform_points(rng, size(rng), -10.0, 10.0));
    for (const auto& f : testing::catalog()) {
      const auto cert = certify(f, pts, 1e-9);
      ++total;
      if (cert.verdict == Verdict::certified &&
          cert.min_eigenvalue >= -1e-9 * static_cast<double>(cert.n) * f.at_zero()) {
        ++certified;
      }
    }
  }
  const double a[3][3] = {{1, 0, -1}, {0, 1, 0}, {-1, 0, 1}};
  auto roots = testing::symmetric3_eigenvalues(a);
  std::sort(roots.begin(), roots.end());
  const bool oracle = roots.size() == 3 && std::abs(roots[0]) <= 1e-12 &&
                      std::abs(roots[1] - 1.0) <= 1e-12 && std::abs(roots[2] - 2.0) <= 1e-12;
  const auto cos3 = certify(make_cosine(), PointConfig{0.0, pi / 2.0, pi}, 1e-9);
  const bool exact = oracle && std::abs(cos3.min_eigenvalue - roots[0]) <= 1e-12 &&
                     cos3.verdict == Verdict::certified;
  return {certified == total && exact, std::to_string(certified) + "/" + std::to_string(total) +
                                           " certified, cos 3x3 min eigenvalue " +
                                           fmt(cos3.min_eigenvalue)};
}

Outcome sharp_constant() {
  const auto limit = linnik_constant_probe(make_gaussian(), {1e-3});
  ProbeOptions options;
  options.domain = {-2.0, 2.0};
  options.budget = 10000;
  const auto probe = probe_ratio("linnik", make_gaussian(), options);
  const bool pass = std::abs(limit[0].ratio - 4.0) <= 1e-5 && !limit[0].skipped &&
                    probe.best_ratio >= 0.999 && probe.best_ratio <= 1.0 + 1e-9;
  char buffer[128];
  std::snprintf(buffer, sizeof buffer, "limit ratio %.9f, best_ratio %.12f", limit[0].ratio,
                probe.best_ratio);
  return {pass, buffer};
}

Outcome equality_cases() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> point(-10.0, 10.0);
  double worst = 0.0;
  const auto cos = make_cosine();
  for (int i = 0; i < 1000; ++i) worst = std::max(worst, std::abs(linnik_squared(cos, point(rng)).margin));
  const auto e = make_exponential(1.0);
  const UnimodularScalar alpha(pi);
  double worst_krein = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = point(rng);
    worst_krein = std::max(worst_krein, std::abs(generalized_krein(e, alpha, x, x + pi).margin));
  }
  return {worst <= 1e-12 && worst_krein <= 1e-12,
          "max |margin| linnik-sq " + fmt(worst) + ", generalized krein " + fmt(worst_krein)};
}

Outcome counterexamples() {
  bool all = true;
  for (auto id : kScenarioIds) all = all && run_scenario(id).passed();
  const double mixed = multipoint_mixed(make_cosine(), PointConfig{pi}).margin;
  const double plus =
      gorin_plus(make_cosine(), PointConfig{pi, pi}, PointConfig{0.0, 0.0}).margin;
  const bool pass = all && std::abs(mixed + 2.0) <= 1e-12 && std::abs(plus + 4.0) <= 1e-12;
  return {pass, std::string(all ? "scenarios pass" : "a scenario failed") + ", mp-mixed " +
                    fmt(mixed) + ", gorin-plus " + fmt(plus)};
}

Outcome reduction_identities() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> point(-10.0, 10.0);
  std::uniform_int_distribution<int> iterations(1, 6);
  const auto functions = testing::catalog();
  std::uniform_int_distribution<std::size_t> pick(0, functions.size() - 1);
  double worst = 0.0;
  int order_violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const PdFunction& f = functions[pick(rng)];
    const PdFunction u = normalize(f.is_real() ? f : real_part(f));
    const double x = point(rng);
    const double y = point(rng);
    const double k = krein(f, x, y).margin;
    worst = std::max(worst, std::abs(generalized_krein(f, UnimodularScalar(0.0), x, y).margin - k));
    worst = std::max(worst, std::abs(gorin_minus(f, PointConfig{x}, PointConfig{y}).margin - k));
    worst = std::max(worst, std::abs(gorin_plus(f, PointConfig{x}, PointConfig{y}).margin -
                                     krein_plus(f, x, y).margin));
    worst = std::max(worst, std::abs(linnik_iterated(u, x, 1).margin - linnik(u, x).margin));
    worst = std::max(worst, std::abs(linnik_shift(u, x).margin - linnik(u, x).margin / 4.0));
    const int m = iterations(rng);
    if (linnik_refined(u, x, m).rhs > linnik_iterated(u, x, m).rhs + 1e-12) ++order_violations;
  }
  return {worst <= 1e-12 && order_violations == 0,
          "max deviation " + fmt(worst) + ", refined > iterated " + std::to_string(order_violations)};
}

Outcome trig_cross_check() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> freq(0.1, 5.0);
  std::uniform_int_distribution<int> size(1, 6);
  int lemma_held = 0, implied = 0;
  for (int i = 0; i < 1000; ++i) {
    const double t = freq(rng);
    const auto u = make_from_measure({{t, -t}, {0.5, 0.5}});
    const auto xs = testing::uniform_points(rng, size(rng), -10.0, 10.0);
    std::vector<double> ss;
    for (double x : xs) ss.push_back(t * x / 2.0);
    if (!trig_sin_sq(PointConfig(ss)).holds) continue;
    ++lemma_held;
    if (multipoint_minus(u, PointConfig(xs)).holds) ++implied;
  }
  return {lemma_held > 0 && implied == lemma_held,
          std::to_string(implied) + "/" + std::to_string(lemma_held) + " instances"};
}

int run_cli(const std::string& args, const std::string& out_file = "/dev/null") {
  const std::string cmd = std::string(PDLAB_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_end_to_end() {
  struct Case {
    const char* name;
    const char* args;
    int expected;
  };
  const Case cases[] = {
      {"holds", "verify --ineq linnik --fn gauss --x 0.5", 0},
      {"violates-expected", "verify --ineq mp-mixed --fn cos --x 3.14159265", 0},
      // Roundoff leaves a margin of about -3e-16 here; a tolerance below it
      // makes a claimed inequality fail.
      {"violates-unexpected", "verify --ineq linnik-sq --fn cos --x 0.08 --tol 1e-20", 1},
      {"usage-error", "verify --ineq linnik --fn gauss --x 0.5,abc", 2},
  };
  std::string detail;
  bool pass = true;
  for (const auto& c : cases) {
    const int code = run_cli(c.args);
    pass = pass && code == c.expected;
    detail += std::string(c.name) + "=" + std::to_string(code) + " ";
  }

  // In-memory reports survive serialization exactly.
  std::mt19937_64 rng(12);
  const auto functions = testing::catalog();
  std::uniform_int_distribution<std::size_t> pick_f(0, functions.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_id(0, std::size(ids::all) - 1);
  int lossless = 0, total = 0;
  while (total < 100) {
    const auto id = ids::all[pick_id(rng)];
    if (id == ids::quasi_period) continue;
    const auto r = testing::random_report(id, testing::adapt_for(id, functions[pick_f(rng)]), rng);
    ++total;
    if (margin_report_from_json(nlohmann::json::parse(to_json(r).dump())) == r) ++lossless;
  }

  // The CLI's JSON output matches the library evaluation field for field.
  const std::string out_file = "pdlab_acceptance_cli.jsonl";
  run_cli("verify --ineq gorin-minus --fn exp:1 --x 0.3,1.7,-2.2 --y 1,2,3 --format json",
          out_file);
  std::ifstream in(out_file);
  std::string line;
  std::getline(in, line);
  in.close();
  std::remove(out_file.c_str());
  const auto expected = gorin_minus(make_exponential(1.0), PointConfig{0.3, 1.7, -2.2},
                                    PointConfig{1.0, 2.0, 3.0});
  bool cli_json = false;
  try {
    cli_json = margin_report_from_json(nlohmann::json::parse(line)) == expected;
  } catch (const std::exception&) {
  }
  pass = pass && lossless == total && cli_json;
  detail += "round-trip " + std::to_string(lossless) + "/" + std::to_string(total) +
            ", cli json " + (cli_json ? "equal" : "differs");
  return {pass, detail};
}

}  // namespace

int main() {
  criterion(1, "property suite over the catalog", property_suite);
  criterion(2, "PSD certification", psd_certification);
  criterion(3, "sharpness of the doubling constant", sharp_constant);
  criterion(4, "equality cases", equality_cases);
  criterion(5, "counterexample reproduction", counterexamples);
  criterion(6, "reduction identities", reduction_identities);
  criterion(7, "trig-lemma cross-check", trig_cross_check);
  criterion(8, "CLI exit codes and JSON round-trip", cli_end_to_end);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
