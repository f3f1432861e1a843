#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "pdlab/gram.hpp"
#include "pdlab/margin_report.hpp"
#include "pdlab/pdf_catalog.hpp"

namespace pdlab {

// Every operation returns lhs, rhs and margin = rhs - lhs. Operations never
// throw on a wrong parity of n: the report's expected_valid flag says whether
// the inequality is claimed for that input, so violations can be shown.
//
// Functions tagged "normalized" require u(0) = 1 within kNormalizationTolerance
// and throw NormalizationError otherwise; use normalize() first. Functions on
// u require a real-valued argument and throw NotRealError otherwise.

inline constexpr double kNormalizationTolerance = 1e-12;

/// |f(x) - f(y)|^2 <= 2 f(0) Re[f(0) - f(x - y)]. The squared modulus makes
/// this defined for complex f; for real f it is the classical square.
MarginReport krein(const PdFunction& f, double x, double y,
                   double tolerance = kDefaultTolerance);
/// |a f(x) - f(y)|^2 <= 2 f(0) Re[f(0) - a f(x - y)], |a| = 1.
MarginReport generalized_krein(const PdFunction& f, const UnimodularScalar& alpha, double x,
                               double y, double tolerance = kDefaultTolerance);
/// |f(x) + f(y)|^2 <= 2 f(0) [f(0) + Re f(x - y)].
MarginReport krein_plus(const PdFunction& f, double x, double y,
                        double tolerance = kDefaultTolerance);
/// For a quasi-period T with f(T) = a f(0): one report per sample point with
/// lhs = |f(x + T) - a f(x)|^2 and rhs = 0. Throws HypothesisNotMet when
/// |f(T) - a f(0)| > tolerance.
std::vector<MarginReport> quasi_period_check(const PdFunction& f, double period,
                                             const UnimodularScalar& alpha,
                                             const PointConfig& sample,
                                             double tolerance = kDefaultTolerance);

/// u(0) - u(2x) <= 4 (u(0) - u(x)).
MarginReport linnik(const PdFunction& u, double x, double tolerance = kDefaultTolerance);
/// Normalized: 1 - u(2x) <= 2 (1 - u(x)^2). Equality for cos.
MarginReport linnik_squared(const PdFunction& u, double x,
                            double tolerance = kDefaultTolerance);
/// Normalized: 1 + u(x) <= (7 + u(2x)) / 4; its margin is a quarter of the
/// normalized linnik margin.
MarginReport linnik_shift(const PdFunction& u, double x, double tolerance = kDefaultTolerance);
/// Normalized: 1 - u(2^m x) <= 4^m (1 - u(x)), m >= 1.
MarginReport linnik_iterated(const PdFunction& u, double x, int m,
                             double tolerance = kDefaultTolerance);
/// Normalized: 1 - u(2^m x) <= 2^m (1 - u(x)) prod_{k=1..m} (7 + u(2^k x)) / 4.
MarginReport linnik_refined(const PdFunction& u, double x, int m,
                            double tolerance = kDefaultTolerance);
/// rhs(linnik_iterated) - rhs(linnik_refined); nonnegative up to roundoff
/// since every product factor is at most 2.
double linnik_bound_gap(const PdFunction& u, double x, int m);

/// u(0) - u(sum x) <= n sum (u(0) - u(x_k)), all n.
MarginReport multipoint_minus(const PdFunction& u, const PointConfig& xs,
                              double tolerance = kDefaultTolerance);
/// |f(sum x) - f(sum y)|^2 <= 2n f(0) sum [f(0) - Re f(x_k - y_k)]; claimed for odd n.
MarginReport gorin_minus(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                         double tolerance = kDefaultTolerance);
/// Normalized: u(0) - u(sum x) <= n sum (1 + u(x_k)); claimed for even n.
MarginReport multipoint_mixed(const PdFunction& u, const PointConfig& xs,
                              double tolerance = kDefaultTolerance);
/// |f(sum x) - f(sum y)|^2 <= 2n f(0) sum [f(0) + Re f(x_k - y_k)]; claimed for even n.
MarginReport gorin_mixed(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                         double tolerance = kDefaultTolerance);
/// Normalized: u(0) + u(sum x) <= n sum (1 + u(x_k)); claimed for odd n.
MarginReport multipoint_plus(const PdFunction& u, const PointConfig& xs,
                             double tolerance = kDefaultTolerance);
/// |f(sum x) + f(sum y)|^2 <= 2n f(0) sum [f(0) + Re f(x_k - y_k)]; claimed for odd n.
MarginReport gorin_plus(const PdFunction& f, const PointConfig& xs, const PointConfig& ys,
                        double tolerance = kDefaultTolerance);

// Scalar trigonometric lemmas behind the multipoint family.

/// 1 - cos(t sum x) <= n sum (1 - cos(t x_k)).
MarginReport trig_cos_sum(double t, const PointConfig& xs,
                          double tolerance = kDefaultTolerance);
/// sin^2(sum s) <= n sum sin^2(s_k).
MarginReport trig_sin_sq(const PointConfig& ss, double tolerance = kDefaultTolerance);
/// |sin(sum s)| <= sum |sin(s_k)|.
MarginReport trig_sin_abs(const PointConfig& ss, double tolerance = kDefaultTolerance);

enum class TrigVariant { sin_lhs, cos_lhs };
/// sin^2 or cos^2 of sum s against n sum cos^2(s_k). sin_lhs is claimed for
/// even n, cos_lhs for odd n.
MarginReport trig_sin_cos(const PointConfig& ss, TrigVariant variant,
                          double tolerance = kDefaultTolerance);

/// Stable ids used in reports and on the command line.
namespace ids {
inline constexpr std::string_view krein = "krein";
inline constexpr std::string_view krein_gen = "krein-gen";
inline constexpr std::string_view krein_plus = "krein-plus";
inline constexpr std::string_view quasi_period = "quasi-period";
inline constexpr std::string_view linnik = "linnik";
inline constexpr std::string_view linnik_sq = "linnik-sq";
inline constexpr std::string_view linnik_shift = "linnik-shift";
inline constexpr std::string_view linnik_iter = "linnik-iter";
inline constexpr std::string_view linnik_refined = "linnik-refined";
inline constexpr std::string_view mp_minus = "mp-minus";
inline constexpr std::string_view gorin_minus = "gorin-minus";
inline constexpr std::string_view mp_mixed = "mp-mixed";
inline constexpr std::string_view gorin_mixed = "gorin-mixed";
inline constexpr std::string_view mp_plus = "mp-plus";
inline constexpr std::string_view gorin_plus = "gorin-plus";
inline constexpr std::string_view trig_cos_sum = "trig-cos-sum";
inline constexpr std::string_view trig_sin_sq = "trig-sin-sq";
inline constexpr std::string_view trig_sin_abs = "trig-sin-abs";
inline constexpr std::string_view trig_sin_cos = "trig-sin-cos";

inline constexpr std::array<std::string_view, 19> all = {
    krein,       krein_gen,   krein_plus, quasi_period, linnik,       linnik_sq,   linnik_shift,
    linnik_iter, linnik_refined, mp_minus, gorin_minus, mp_mixed,     gorin_mixed, mp_plus,
    gorin_plus,  trig_cos_sum, trig_sin_sq, trig_sin_abs, trig_sin_cos};
}  // namespace ids

bool is_known_inequality(std::string_view id);

/// Uniform argument bundle for dispatching by id (CLI and prober). Only the
/// fields an inequality uses are read.
struct InequalityArgs {
  std::vector<double> xs;
  std::vector<double> ys;
  double theta = 0.0;
  double t = 1.0;
  int m = 1;
  TrigVariant variant = TrigVariant::sin_lhs;
};

/// Evaluates a single-report inequality by id. `x`/`y` are xs[0]/ys[0] for
/// two-point inequalities. quasi-period is not a single report and throws
/// UnknownInequality here.
MarginReport evaluate(std::string_view id, const PdFunction& f, const InequalityArgs& args,
                      double tolerance = kDefaultTolerance);

}  // namespace pdlab
