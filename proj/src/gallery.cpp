#include "pdlab/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pdlab/errors.hpp"
#include "pdlab/inequalities.hpp"

namespace pdlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExact = 1e-12;

ScenarioAssertion near(std::string description, double observed, double expected,
                       double tol = kExact) {
  return {std::move(description), observed, expected, std::abs(observed - expected) <= tol};
}

PointConfig repeated(double value, int n) {
  return PointConfig(Eigen::VectorXd::Constant(n, value));
}

// Asserts the margin value and that the report's validity flag matches the
// parity rule.
void expect_margin(ScenarioReport& report, const MarginReport& r, double margin,
                   bool expected_valid) {
  std::ostringstream what;
  what << r.inequality_id << " n=" << r.inputs.front().values.size() << " margin"
       << (expected_valid ? " (claimed parity, holds)" : " (wrong parity, violated)");
  auto a = near(what.str(), r.margin, margin);
  a.pass = a.pass && r.expected_valid == expected_valid && r.holds == expected_valid;
  report.assertions.push_back(std::move(a));
}

}  // namespace

bool ScenarioReport::passed() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](const ScenarioAssertion& a) { return a.pass; });
}

ScenarioReport tent_extension_demo(std::uint64_t seed) {
  ScenarioReport report;
  report.id = "tent-extension";
  report.narrative =
      "tent(2) and tent(1) + const(1) are both positive definite and agree on [-1, 1], "
      "but differ outside it: a p.d. function is not determined by its values on an "
      "interval.";

  const PdFunction f = make_tent(2.0);
  const PdFunction parts[] = {make_tent(1.0), make_const(1.0)};
  const double weights[] = {1.0, 1.0};
  const PdFunction g = combine_sum(parts, weights);

  const PointConfig pts(sample_window(seed, 12, -4.0, 4.0));
  for (const PdFunction* h : {&f, &g}) {
    const PsdCertificate cert = certify(*h, pts);
    const double floor = -cert.tolerance * static_cast<double>(cert.n) * h->at_zero();
    report.assertions.push_back({"certify " + h->label() + " on 12 seeded points in [-4, 4]",
                                 cert.min_eigenvalue, floor,
                                 cert.verdict == Verdict::certified});
  }

  double worst = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const double x = -1.0 + 0.02 * k;
    worst = std::max(worst, std::abs(f(x) - g(x)));
  }
  report.assertions.push_back(near("max |f - g| on a 101-point grid of [-1, 1]", worst, 0.0));
  report.assertions.push_back(near("f(0)", f.re(0.0), 2.0));
  report.assertions.push_back(near("g(0)", g.re(0.0), 2.0));
  report.assertions.push_back(near("f(1.5)", f.re(1.5), 0.5));
  report.assertions.push_back(near("g(1.5)", g.re(1.5), 1.0));
  const double gap = std::abs(f(1.5) - g(1.5));
  report.assertions.push_back({"|f(1.5) - g(1.5)| > 0", gap, 0.5, gap > kExact});
  return report;
}

ScenarioReport parity_counterexamples() {
  ScenarioReport report;
  report.id = "parity-failures";
  report.narrative =
      "With u = f = cos, x_k = pi and y_k = 0, mp-mixed fails for odd n, mp-plus and "
      "gorin-plus fail for even n, and each holds with equality for the other parity.";

  const PdFunction u = make_cosine();
  const PointConfig ys2 = repeated(0.0, 2);
  const PointConfig ys4 = repeated(0.0, 4);

  expect_margin(report, multipoint_mixed(u, repeated(kPi, 1)), -2.0, false);
  expect_margin(report, multipoint_mixed(u, repeated(kPi, 3)), -2.0, false);
  expect_margin(report, multipoint_mixed(u, repeated(kPi, 2)), 0.0, true);
  expect_margin(report, multipoint_mixed(u, repeated(kPi, 4)), 0.0, true);

  expect_margin(report, multipoint_plus(u, repeated(kPi, 2)), -2.0, false);
  expect_margin(report, multipoint_plus(u, repeated(kPi, 4)), -2.0, false);
  expect_margin(report, multipoint_plus(u, repeated(kPi, 1)), 0.0, true);
  expect_margin(report, multipoint_plus(u, repeated(kPi, 3)), 0.0, true);

  expect_margin(report, gorin_plus(u, repeated(kPi, 2), ys2), -4.0, false);
  expect_margin(report, gorin_plus(u, repeated(kPi, 4), ys4), -4.0, false);
  expect_margin(report, gorin_plus(u, repeated(kPi, 1), repeated(0.0, 1)), 0.0, true);
  expect_margin(report, gorin_plus(u, repeated(kPi, 3), repeated(0.0, 3)), 0.0, true);
  return report;
}

PointConfig default_equality_points() {
  return PointConfig{0.0, 0.1, 0.7, 1.0, kPi / 3.0, kPi / 2.0, 2.0, kPi, 4.5, 10.0};
}

ScenarioReport cos_equality_case(const PointConfig& xs) {
  ScenarioReport report;
  report.id = "cos-equality";
  report.narrative = "1 - cos(2x) = 2 (1 - cos^2 x), so linnik-sq has zero margin for cos.";
  const PdFunction u = make_cosine();
  for (Eigen::Index k = 0; k < xs.size(); ++k) {
    std::ostringstream what;
    what.precision(17);
    what << "linnik-sq margin at x=" << xs[k];
    report.assertions.push_back(near(what.str(), linnik_squared(u, xs[k]).margin, 0.0));
  }
  return report;
}

ScenarioReport run_scenario(std::string_view id, std::uint64_t seed) {
  if (id == "tent-extension") return tent_extension_demo(seed);
  if (id == "parity-failures") return parity_counterexamples();
  if (id == "cos-equality") return cos_equality_case(default_equality_points());
  throw InvalidParameter("unknown scenario '" + std::string(id) + "'");
}

}  // namespace pdlab
