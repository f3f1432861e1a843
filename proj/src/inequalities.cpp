#include "pdlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

constexpr const char* kScalarLabel = "scalar";

void require_real(const PdFunction& u, std::string_view id) {
  if (!u.is_real()) {
    throw NotRealError(std::string(id) + " requires a real-valued function, got " + u.label());
  }
}

void require_normalized(const PdFunction& u, std::string_view id) {
  require_real(u, id);
  const double origin = u.at_zero();
  if (std::abs(origin - 1.0) > kNormalizationTolerance) {
    throw NormalizationError(std::string(id) + " requires u(0) = 1, got u(0) = " +
                             std::to_string(origin) + " for " + u.label());
  }
}

void require_same_length(const PointConfig& xs, const PointConfig& ys, std::string_view id) {
  if (xs.size() != ys.size()) {
    throw LengthMismatch(std::string(id) + ": xs has " + std::to_string(xs.size()) +
                         " points, ys has " + std::to_string(ys.size()));
  }
}

void require_m(int m) {
  if (m < 1 || m > 60) throw InvalidParameter("iteration count m must be in 1..60");
}

bool is_odd(Eigen::Index n) { return n % 2 != 0; }

// sum_k [f(0) + sign * Re f(x_k - y_k)]
double paired_sum(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                  double sign) {
  const double origin = f.at_zero();
  double sum = 0.0;
  for (Eigen::Index k = 0; k < xs.size(); ++k) sum += origin + sign * f.re(xs[k] - ys[k]);
  return sum;
}

}  // namespace

MarginReport krein(const PdFunction& f, double x, double y, double tolerance) {
  const double origin = f.at_zero();
  const double lhs = std::norm(f(x) - f(y));
  const double rhs = 2.0 * origin * (origin - f.re(x - y));
  auto r = make_report(std::string(ids::krein), f.label(), {{"x", {x}}, {"y", {y}}}, lhs, rhs,
                       f.is_certified_pd(), tolerance);
  r.note = "lhs = |f(x) - f(y)|^2";
  return r;
}

MarginReport generalized_krein(const PdFunction& f, const UnimodularScalar& alpha, double x,
                               double y, double tolerance) {
  const double origin = f.at_zero();
  const Complex a = alpha.value();
  const double lhs = std::norm(a * f(x) - f(y));
  const double rhs = 2.0 * origin * (origin - (a * f(x - y)).real());
  return make_report(std::string(ids::krein_gen), f.label(),
                     {{"theta", {alpha.theta()}}, {"x", {x}}, {"y", {y}}}, lhs, rhs,
                     f.is_certified_pd(), tolerance);
}

MarginReport krein_plus(const PdFunction& f, double x, double y, double tolerance) {
  const double origin = f.at_zero();
  const double lhs = std::norm(f(x) + f(y));
  const double rhs = 2.0 * origin * (origin + f.re(x - y));
  return make_report(std::string(ids::krein_plus), f.label(), {{"x", {x}}, {"y", {y}}}, lhs,
                     rhs, f.is_certified_pd(), tolerance);
}

std::vector<MarginReport> quasi_period_check(const PdFunction& f, double period,
                                             const UnimodularScalar& alpha,
                                             const PointConfig& sample, double tolerance) {
  const Complex a = alpha.value();
  const double residual = std::abs(f(period) - a * f(0.0));
  if (residual > tolerance) {
    throw HypothesisNotMet("quasi-period: |f(T) - alpha f(0)| = " + std::to_string(residual) +
                           " exceeds tolerance for " + f.label());
  }
  std::vector<MarginReport> out;
  out.reserve(static_cast<std::size_t>(sample.size()));
  for (Eigen::Index k = 0; k < sample.size(); ++k) {
    const double x = sample[k];
    const double lhs = std::norm(f(x + period) - a * f(x));
    out.push_back(make_report(std::string(ids::quasi_period), f.label(),
                              {{"T", {period}}, {"theta", {alpha.theta()}}, {"x", {x}}}, lhs,
                              0.0, f.is_certified_pd(), tolerance));
  }
  return out;
}

MarginReport linnik(const PdFunction& u, double x, double tolerance) {
  require_real(u, ids::linnik);
  const double origin = u.at_zero();
  return make_report(std::string(ids::linnik), u.label(), {{"x", {x}}},
                     origin - u.re(2.0 * x), 4.0 * (origin - u.re(x)), u.is_certified_pd(),
                     tolerance);
}

MarginReport linnik_squared(const PdFunction& u, double x, double tolerance) {
  require_normalized(u, ids::linnik_sq);
  const double ux = u.re(x);
  return make_report(std::string(ids::linnik_sq), u.label(), {{"x", {x}}},
                     1.0 - u.re(2.0 * x), 2.0 * (1.0 - ux * ux), u.is_certified_pd(),
                     tolerance);
}

MarginReport linnik_shift(const PdFunction& u, double x, double tolerance) {
  require_normalized(u, ids::linnik_shift);
  return make_report(std::string(ids::linnik_shift), u.label(), {{"x", {x}}}, 1.0 + u.re(x),
                     (7.0 + u.re(2.0 * x)) / 4.0, u.is_certified_pd(), tolerance);
}

MarginReport linnik_iterated(const PdFunction& u, double x, int m, double tolerance) {
  require_normalized(u, ids::linnik_iter);
  require_m(m);
  const double lhs = 1.0 - u.re(std::ldexp(x, m));
  const double rhs = std::pow(4.0, m) * (1.0 - u.re(x));
  return make_report(std::string(ids::linnik_iter), u.label(),
                     {{"x", {x}}, {"m", {static_cast<double>(m)}}}, lhs, rhs,
                     u.is_certified_pd(), tolerance);
}

namespace {

double refined_rhs(const PdFunction& u, double x, int m) {
  double product = 1.0;
  for (int k = 1; k <= m; ++k) product *= (7.0 + u.re(std::ldexp(x, k))) / 4.0;
  return std::ldexp(1.0 - u.re(x), m) * product;
}

}  // namespace

MarginReport linnik_refined(const PdFunction& u, double x, int m, double tolerance) {
  require_normalized(u, ids::linnik_refined);
  require_m(m);
  const double lhs = 1.0 - u.re(std::ldexp(x, m));
  return make_report(std::string(ids::linnik_refined), u.label(),
                     {{"x", {x}}, {"m", {static_cast<double>(m)}}}, lhs, refined_rhs(u, x, m),
                     u.is_certified_pd(), tolerance);
}

double linnik_bound_gap(const PdFunction& u, double x, int m) {
  require_normalized(u, ids::linnik_refined);
  require_m(m);
  return std::pow(4.0, m) * (1.0 - u.re(x)) - refined_rhs(u, x, m);
}

MarginReport multipoint_minus(const PdFunction& u, const PointConfig& xs, double tolerance) {
  require_real(u, ids::mp_minus);
  const double origin = u.at_zero();
  const auto n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (Eigen::Index k = 0; k < xs.size(); ++k) sum += origin - u.re(xs[k]);
  return make_report(std::string(ids::mp_minus), u.label(), {{"xs", xs.to_vector()}},
                     origin - u.re(xs.sum()), n * sum, u.is_certified_pd(), tolerance);
}

MarginReport gorin_minus(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                         double tolerance) {
  require_same_length(xs, ys, ids::gorin_minus);
  const auto n = static_cast<double>(xs.size());
  const double lhs = std::norm(f(xs.sum()) - f(ys.sum()));
  const double rhs = 2.0 * n * f.at_zero() * paired_sum(f, xs, ys, -1.0);
  return make_report(std::string(ids::gorin_minus), f.label(),
                     {{"xs", xs.to_vector()}, {"ys", ys.to_vector()}}, lhs, rhs,
                     f.is_certified_pd() && is_odd(xs.size()), tolerance);
}

MarginReport multipoint_mixed(const PdFunction& u, const PointConfig& xs, double tolerance) {
  require_normalized(u, ids::mp_mixed);
  const auto n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (Eigen::Index k = 0; k < xs.size(); ++k) sum += 1.0 + u.re(xs[k]);
  return make_report(std::string(ids::mp_mixed), u.label(), {{"xs", xs.to_vector()}},
                     u.at_zero() - u.re(xs.sum()), n * sum,
                     u.is_certified_pd() && !is_odd(xs.size()), tolerance);
}

MarginReport gorin_mixed(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                         double tolerance) {
  require_same_length(xs, ys, ids::gorin_mixed);
  const auto n = static_cast<double>(xs.size());
  const double lhs = std::norm(f(xs.sum()) - f(ys.sum()));
  const double rhs = 2.0 * n * f.at_zero() * paired_sum(f, xs, ys, 1.0);
  return make_report(std::string(ids::gorin_mixed), f.label(),
                     {{"xs", xs.to_vector()}, {"ys", ys.to_vector()}}, lhs, rhs,
                     f.is_certified_pd() && !is_odd(xs.size()), tolerance);
}

MarginReport multipoint_plus(const PdFunction& u, const PointConfig& xs, double tolerance) {
  require_normalized(u, ids::mp_plus);
  const auto n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (Eigen::Index k = 0; k < xs.size(); ++k) sum += 1.0 + u.re(xs[k]);
  return make_report(std::string(ids::mp_plus), u.label(), {{"xs", xs.to_vector()}},
                     u.at_zero() + u.re(xs.sum()), n * sum,
                     u.is_certified_pd() && is_odd(xs.size()), tolerance);
}

MarginReport gorin_plus(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                        double tolerance) {
  require_same_length(xs, ys, ids::gorin_plus);
  const auto n = static_cast<double>(xs.size());
  const double lhs = std::norm(f(xs.sum()) + f(ys.sum()));
  const double rhs = 2.0 * n * f.at_zero() * paired_sum(f, xs, ys, 1.0);
  return make_report(std::string(ids::gorin_plus), f.label(),
                     {{"xs", xs.to_vector()}, {"ys", ys.to_vector()}}, lhs, rhs,
                     f.is_certified_pd() && is_odd(xs.size()), tolerance);
}

MarginReport trig_cos_sum(double t, const PointConfig& xs, double tolerance) {
  const auto n = static_cast<double>(xs.size());
  const Eigen::ArrayXd scaled = t * xs.points().array();
  const double rhs = n * (1.0 - scaled.cos()).sum();
  return make_report(std::string(ids::trig_cos_sum), kScalarLabel,
                     {{"t", {t}}, {"xs", xs.to_vector()}}, 1.0 - std::cos(t * xs.sum()), rhs,
                     true, tolerance);
}

MarginReport trig_sin_sq(const PointConfig& ss, double tolerance) {
  const auto n = static_cast<double>(ss.size());
  const double lhs = std::pow(std::sin(ss.sum()), 2);
  const double rhs = n * ss.points().array().sin().square().sum();
  return make_report(std::string(ids::trig_sin_sq), kScalarLabel, {{"ss", ss.to_vector()}},
                     lhs, rhs, true, tolerance);
}

MarginReport trig_sin_abs(const PointConfig& ss, double tolerance) {
  return make_report(std::string(ids::trig_sin_abs), kScalarLabel, {{"ss", ss.to_vector()}},
                     std::abs(std::sin(ss.sum())), ss.points().array().sin().abs().sum(), true,
                     tolerance);
}

MarginReport trig_sin_cos(const PointConfig& ss, TrigVariant variant, double tolerance) {
  const auto n = static_cast<double>(ss.size());
  const double total = ss.sum();
  const bool sin_lhs = variant == TrigVariant::sin_lhs;
  const double lhs = sin_lhs ? std::pow(std::sin(total), 2) : std::pow(std::cos(total), 2);
  const double rhs = n * ss.points().array().cos().square().sum();
  const bool expected = sin_lhs ? !is_odd(ss.size()) : is_odd(ss.size());
  auto r = make_report(std::string(ids::trig_sin_cos), kScalarLabel,
                       {{"ss", ss.to_vector()}}, lhs, rhs, expected, tolerance);
  r.note = sin_lhs ? "variant=sin_lhs" : "variant=cos_lhs";
  return r;
}

bool is_known_inequality(std::string_view id) {
  return std::find(ids::all.begin(), ids::all.end(), id) != ids::all.end();
}

MarginReport evaluate(std::string_view id, const PdFunction& f, const InequalityArgs& args,
                      double tolerance) {
  auto first = [&](const std::vector<double>& v, const char* name) {
    if (v.empty()) {
      throw InvalidParameter(std::string(id) + " needs a value for " + name);
    }
    return v.front();
  };
  auto points = [&](const std::vector<double>& v, const char* name) {
    if (v.empty()) {
      throw InvalidParameter(std::string(id) + " needs at least one value for " + name);
    }
    return PointConfig(v);
  };

  if (id == ids::krein) return krein(f, first(args.xs, "x"), first(args.ys, "y"), tolerance);
  if (id == ids::krein_gen) {
    return generalized_krein(f, UnimodularScalar(args.theta), first(args.xs, "x"),
                             first(args.ys, "y"), tolerance);
  }
  if (id == ids::krein_plus) {
    return krein_plus(f, first(args.xs, "x"), first(args.ys, "y"), tolerance);
  }
  if (id == ids::linnik) return linnik(f, first(args.xs, "x"), tolerance);
  if (id == ids::linnik_sq) return linnik_squared(f, first(args.xs, "x"), tolerance);
  if (id == ids::linnik_shift) return linnik_shift(f, first(args.xs, "x"), tolerance);
  if (id == ids::linnik_iter) return linnik_iterated(f, first(args.xs, "x"), args.m, tolerance);
  if (id == ids::linnik_refined) {
    return linnik_refined(f, first(args.xs, "x"), args.m, tolerance);
  }
  if (id == ids::mp_minus) return multipoint_minus(f, points(args.xs, "x"), tolerance);
  if (id == ids::mp_mixed) return multipoint_mixed(f, points(args.xs, "x"), tolerance);
  if (id == ids::mp_plus) return multipoint_plus(f, points(args.xs, "x"), tolerance);
  if (id == ids::gorin_minus) {
    return gorin_minus(f, points(args.xs, "x"), points(args.ys, "y"), tolerance);
  }
  if (id == ids::gorin_mixed) {
    return gorin_mixed(f, points(args.xs, "x"), points(args.ys, "y"), tolerance);
  }
  if (id == ids::gorin_plus) {
    return gorin_plus(f, points(args.xs, "x"), points(args.ys, "y"), tolerance);
  }
  if (id == ids::trig_cos_sum) return trig_cos_sum(args.t, points(args.xs, "x"), tolerance);
  if (id == ids::trig_sin_sq) return trig_sin_sq(points(args.xs, "x"), tolerance);
  if (id == ids::trig_sin_abs) return trig_sin_abs(points(args.xs, "x"), tolerance);
  if (id == ids::trig_sin_cos) {
    return trig_sin_cos(points(args.xs, "x"), args.variant, tolerance);
  }
  if (id == ids::quasi_period) {
    throw UnknownInequality("quasi-period produces a report per sample point; "
                            "call quasi_period_check");
  }
  throw UnknownInequality("unknown inequality id '" + std::string(id) + "'");
}

}  // namespace pdlab
