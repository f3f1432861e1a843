#include "pdlab/gram.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

void check_points(const Eigen::VectorXd& points) {
  if (points.size() < 1) throw InvalidParameter("point configuration is empty");
  if (!points.allFinite()) throw InvalidParameter("point configuration has non-finite entries");
}

}  // namespace

PointConfig::PointConfig(Eigen::VectorXd points) : points_(std::move(points)) {
  check_points(points_);
}

PointConfig::PointConfig(std::initializer_list<double> points)
    : PointConfig(std::vector<double>(points)) {}

PointConfig::PointConfig(const std::vector<double>& points)
    : points_(Eigen::Map<const Eigen::VectorXd>(points.data(),
                                                static_cast<Eigen::Index>(points.size()))) {
  check_points(points_);
}

PointConfig parse_points_text(std::string_view text) {
  std::vector<double> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string_view token(line.data() + first, last - first + 1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidParameter("points line " + std::to_string(line_no) +
                             ": malformed number '" + std::string(token) + "'");
    }
    values.push_back(v);
  }
  return PointConfig(values);
}

PointConfig load_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open points file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_points_text(buffer.str());
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::refuted:
      return "refuted";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "certified") return Verdict::certified;
  if (s == "refuted") return Verdict::refuted;
  if (s == "inconclusive") return Verdict::inconclusive;
  throw InvalidParameter("unknown verdict '" + std::string(s) + "'");
}

Eigen::MatrixXcd build_gram(const PdFunction& f, const PointConfig& pts) {
  const auto n = pts.size();
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) a(k, j) = f(pts[k] - pts[j]);
  }
  return a;
}

FormValue quadratic_form(const PdFunction& f, const PointConfig& pts,
                         const Eigen::VectorXcd& z) {
  if (z.size() != pts.size()) {
    throw LengthMismatch("quadratic_form: " + std::to_string(z.size()) +
                         " coefficients for " + std::to_string(pts.size()) + " points");
  }
  Complex sum = 0.0;
  for (Eigen::Index k = 0; k < pts.size(); ++k) {
    for (Eigen::Index j = 0; j < pts.size(); ++j) {
      sum += f(pts[k] - pts[j]) * z[k] * std::conj(z[j]);
    }
  }
  return {sum.real(), sum.imag()};
}

PsdCertificate certify(const PdFunction& f, const PointConfig& pts, double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidParameter("tolerance must be positive");
  const Eigen::MatrixXcd a = build_gram(f, pts);
  if (!a.allFinite()) {
    throw EvaluationError("Gram matrix of " + f.label() + " has non-finite entries");
  }
  PsdCertificate cert;
  cert.n = a.rows();
  cert.tolerance = tolerance;
  cert.hermitian_deviation = hermitian_deviation(a);
  cert.min_eigenvalue = min_hermitian_eigenvalue(a);

  const double scale = static_cast<double>(cert.n) * std::abs(f.at_zero());
  const double band = tolerance * scale;
  if (cert.min_eigenvalue < -10.0 * band || cert.hermitian_deviation > 10.0 * band) {
    // A non-Hermitian Gram matrix already gives a non-real form value.
    cert.verdict = Verdict::refuted;
  } else if (cert.min_eigenvalue >= -band && cert.hermitian_deviation <= band) {
    cert.verdict = Verdict::certified;
  } else {
    cert.verdict = Verdict::inconclusive;
  }
  return cert;
}

std::vector<MarginReport> check_basic_bounds(const PdFunction& f, const PointConfig& sample,
                                             double tolerance) {
  std::vector<MarginReport> out;
  out.reserve(2 * static_cast<std::size_t>(sample.size()));
  const double origin = f.at_zero();
  for (Eigen::Index k = 0; k < sample.size(); ++k) {
    const double x = sample[k];
    const Complex fx = f(x);
    out.push_back(make_report("bound-modulus", f.label(), {{"x", {x}}}, std::abs(fx), origin,
                              f.is_certified_pd(), tolerance));
    out.push_back(make_report("bound-conjugate", f.label(), {{"x", {x}}},
                              std::abs(f(-x) - std::conj(fx)), 0.0, f.is_certified_pd(),
                              tolerance));
  }
  return out;
}

}  // namespace pdlab
