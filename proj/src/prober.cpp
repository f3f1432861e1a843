#include "pdlab/prober.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

enum class Mode { ratio, violation };

enum class Shape {
  pair,           // (x, y)
  angle_pair,     // (theta, x, y)
  single,         // (x)
  single_m,       // (x), m discrete
  multipoint,     // (x_1..x_n)
  frequency_multi,  // (t, x_1..x_n)
  two_configs,    // (x_1..x_n, y_1..y_n)
};

Shape shape_of(std::string_view id) {
  if (id == ids::krein || id == ids::krein_plus) return Shape::pair;
  if (id == ids::krein_gen) return Shape::angle_pair;
  if (id == ids::linnik || id == ids::linnik_sq || id == ids::linnik_shift) {
    return Shape::single;
  }
  if (id == ids::linnik_iter || id == ids::linnik_refined) return Shape::single_m;
  if (id == ids::mp_minus || id == ids::mp_mixed || id == ids::mp_plus ||
      id == ids::trig_sin_sq || id == ids::trig_sin_abs || id == ids::trig_sin_cos) {
    return Shape::multipoint;
  }
  if (id == ids::trig_cos_sum) return Shape::frequency_multi;
  if (id == ids::gorin_minus || id == ids::gorin_mixed || id == ids::gorin_plus) {
    return Shape::two_configs;
  }
  if (id == ids::quasi_period) {
    throw UnknownInequality("quasi-period has no free configuration to probe");
  }
  throw UnknownInequality("unknown inequality id '" + std::string(id) + "'");
}

int dimension(Shape shape, int n) {
  switch (shape) {
    case Shape::pair:
      return 2;
    case Shape::angle_pair:
      return 3;
    case Shape::single:
    case Shape::single_m:
      return 1;
    case Shape::multipoint:
      return n;
    case Shape::frequency_multi:
      return n + 1;
    case Shape::two_configs:
      return 2 * n;
  }
  return 1;
}

InequalityArgs to_args(Shape shape, const std::vector<double>& c, int n, int m,
                       TrigVariant variant) {
  InequalityArgs args;
  args.m = m;
  args.variant = variant;
  switch (shape) {
    case Shape::pair:
      args.xs = {c[0]};
      args.ys = {c[1]};
      break;
    case Shape::angle_pair:
      args.theta = c[0];
      args.xs = {c[1]};
      args.ys = {c[2]};
      break;
    case Shape::single:
    case Shape::single_m:
      args.xs = {c[0]};
      break;
    case Shape::multipoint:
      args.xs = c;
      break;
    case Shape::frequency_multi:
      args.t = c[0];
      args.xs.assign(c.begin() + 1, c.end());
      break;
    case Shape::two_configs:
      args.xs.assign(c.begin(), c.begin() + n);
      args.ys.assign(c.begin() + n, c.end());
      break;
  }
  return args;
}

// splitmix64 finalizer; decorrelates per-start seeds.
std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Candidate {
  double objective = kNegInf;
  double ratio = kNegInf;
  InequalityArgs args;
};

class Search {
 public:
  Search(std::string_view id, const PdFunction& f, const ProbeOptions& options, Mode mode,
         std::optional<int> fixed_n)
      : id_(id),
        f_(f),
        options_(options),
        mode_(mode),
        fixed_n_(fixed_n),
        shape_(shape_of(id)),
        guard_(options.guard_factor * f.at_zero() * f.at_zero()) {
    if (options.budget < 1) throw InvalidParameter("probe budget must be at least 1");
    if (!(options.domain.hi > options.domain.lo) || !std::isfinite(options.domain.lo) ||
        !std::isfinite(options.domain.hi)) {
      throw InvalidParameter("probe domain must be a nondegenerate finite interval");
    }
    if (options.evaluations_per_start < 1) {
      throw InvalidParameter("evaluations_per_start must be at least 1");
    }
    if (fixed_n && *fixed_n < 1) throw InvalidParameter("configuration length n must be >= 1");
    if (!fixed_n && (options.n_min < 1 || options.n_max < options.n_min)) {
      throw InvalidParameter("invalid n range");
    }
    if (options.m_min < 1 || options.m_max < options.m_min) {
      throw InvalidParameter("invalid m range");
    }
  }

  ProbeResult run() {
    for (std::uint64_t start = 0; used_ < options_.budget; ++start) run_start(start);

    ProbeResult result;
    result.inequality_id = std::string(id_);
    result.function = f_.label();
    result.evaluations = used_;
    result.guard_epsilon = guard_;
    result.best_ratio = best_ratio_ > 0.0 ? best_ratio_ : 0.0;
    result.degenerate = best_.objective == kNegInf;
    if (result.degenerate) return result;

    result.best_objective = best_.objective;
    // Fresh evaluation so the returned report does not depend on search state.
    MarginReport fresh = evaluate(id_, f_, best_.args, options_.tolerance);
    result.argmax_inputs = fresh.inputs;
    result.violation_found = fresh.margin < -options_.tolerance;
    result.best_report = std::move(fresh);
    return result;
  }

 private:
  double lower(int coord) const {
    return shape_ == Shape::angle_pair && coord == 0 ? -std::numbers::pi : options_.domain.lo;
  }
  double upper(int coord) const {
    return shape_ == Shape::angle_pair && coord == 0 ? std::numbers::pi : options_.domain.hi;
  }

  Candidate score(const std::vector<double>& coords, int n, int m) {
    ++used_;
    Candidate c;
    c.args = to_args(shape_, coords, n, m, options_.variant);
    const MarginReport r = evaluate(id_, f_, c.args, options_.tolerance);
    if (r.rhs > guard_) c.ratio = r.lhs / r.rhs;
    c.objective = mode_ == Mode::ratio ? c.ratio : r.lhs - r.rhs;
    if (c.ratio > best_ratio_) best_ratio_ = c.ratio;
    if (c.objective > best_.objective) best_ = c;
    return c;
  }

  void run_start(std::uint64_t start) {
    std::mt19937_64 rng(mix(options_.seed, start));
    const int n = fixed_n_ ? *fixed_n_
                           : std::uniform_int_distribution<int>(options_.n_min,
                                                                options_.n_max)(rng);
    const int m = std::uniform_int_distribution<int>(options_.m_min, options_.m_max)(rng);
    const int dim = dimension(shape_, n);

    std::vector<double> point(dim);
    std::vector<double> step(dim);
    for (int c = 0; c < dim; ++c) {
      point[c] = std::uniform_real_distribution<double>(lower(c), upper(c))(rng);
      step[c] = 0.25 * (upper(c) - lower(c));
    }

    int local_used = 0;
    auto has_budget = [&] {
      return used_ < options_.budget && local_used < options_.evaluations_per_start;
    };
    double current = score(point, n, m).objective;
    ++local_used;

    while (has_budget()) {
      bool improved = false;
      for (int c = 0; c < dim && has_budget(); ++c) {
        for (double direction : {1.0, -1.0}) {
          if (!has_budget()) break;
          std::vector<double> trial = point;
          trial[c] = std::clamp(point[c] + direction * step[c], lower(c), upper(c));
          if (trial[c] == point[c]) continue;
          const double value = score(trial, n, m).objective;
          ++local_used;
          if (value > current) {
            current = value;
            point = std::move(trial);
            improved = true;
            break;
          }
        }
      }
      if (!improved) {
        bool exhausted = true;
        for (int c = 0; c < dim; ++c) {
          step[c] *= 0.5;
          if (step[c] > 1e-13 * (upper(c) - lower(c))) exhausted = false;
        }
        if (exhausted) break;
      }
    }
  }

  std::string_view id_;
  const PdFunction& f_;
  const ProbeOptions& options_;
  Mode mode_;
  std::optional<int> fixed_n_;
  Shape shape_;
  double guard_;
  int used_ = 0;
  double best_ratio_ = 0.0;
  Candidate best_;
};

}  // namespace

ProbeResult probe_ratio(std::string_view id, const PdFunction& f, const ProbeOptions& options) {
  return Search(id, f, options, Mode::ratio, std::nullopt).run();
}

ProbeResult find_violation(std::string_view id, const PdFunction& f, int n,
                           const ProbeOptions& options) {
  return Search(id, f, options, Mode::violation, n).run();
}

ProbeOptions violation_defaults() {
  ProbeOptions options;
  options.domain = {-2.0 * std::numbers::pi, 2.0 * std::numbers::pi};
  return options;
}

std::vector<LimitRatio> linnik_constant_probe(const PdFunction& u,
                                              const std::vector<double>& x_sequence) {
  if (!u.is_real()) throw NotRealError("linnik_constant_probe requires a real function");
  if (std::abs(u.at_zero() - 1.0) > kNormalizationTolerance) {
    throw NormalizationError("linnik_constant_probe requires u(0) = 1");
  }
  std::vector<LimitRatio> out;
  out.reserve(x_sequence.size());
  double previous = std::numeric_limits<double>::infinity();
  for (double x : x_sequence) {
    if (!(x > 1e-6) || !std::isfinite(x)) {
      throw InvalidParameter("x sequence must stay above 1e-6, got " + std::to_string(x));
    }
    if (!(x < previous)) throw InvalidParameter("x sequence must be strictly decreasing");
    previous = x;
    LimitRatio entry{x, 0.0, false};
    const double denominator = 1.0 - u.re(x);
    if (denominator < 1e-13) {
      entry.skipped = true;
    } else {
      entry.ratio = (1.0 - u.re(2.0 * x)) / denominator;
    }
    out.push_back(entry);
  }
  return out;
}

}  // namespace pdlab
