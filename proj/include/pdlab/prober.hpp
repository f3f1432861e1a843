#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdlab/inequalities.hpp"
#include "pdlab/margin_report.hpp"
#include "pdlab/pdf_catalog.hpp"

namespace pdlab {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ProbeOptions {
  Interval domain{-2.0, 2.0};
  int budget = 10000;
  std::uint64_t seed = 0;
  /// Range of n for multipoint ids when the caller does not fix it.
  int n_min = 1;
  int n_max = 4;
  /// Range of m for linnik-iter and linnik-refined.
  int m_min = 1;
  int m_max = 4;
  TrigVariant variant = TrigVariant::sin_lhs;
  /// Configurations with rhs <= guard_factor * f(0)^2 are skipped in ratio
  /// mode. Below this the ratio of two differences near f(0) is dominated by
  /// roundoff in f.
  double guard_factor = 1e-6;
  /// Evaluations spent on one start (one random draw plus refinement). The
  /// start schedule does not depend on the total budget, so a larger budget
  /// only appends starts.
  int evaluations_per_start = 200;
  double tolerance = kDefaultTolerance;
};

struct ProbeResult {
  std::string inequality_id;
  std::string function;
  /// Largest lhs/rhs seen over configurations that passed the guard; 0 when
  /// none did.
  double best_ratio = 0.0;
  /// Largest search objective: lhs/rhs in ratio mode, -margin in violation
  /// mode.
  double best_objective = 0.0;
  std::vector<Param> argmax_inputs;
  int evaluations = 0;
  double guard_epsilon = 0.0;
  /// No configuration passed the rhs guard.
  bool degenerate = false;
  /// A fresh re-evaluation at the argmax has margin < -tolerance.
  bool violation_found = false;
  /// Fresh re-evaluation at the argmax, absent when degenerate.
  std::optional<MarginReport> best_report;

  friend bool operator==(const ProbeResult&, const ProbeResult&) = default;
};

/// Multi-start random search with coordinate-wise shrinking refinement,
/// maximizing lhs/rhs. Deterministic for a given seed.
ProbeResult probe_ratio(std::string_view id, const PdFunction& f, const ProbeOptions& options);

/// Same search maximizing -margin with the configuration length fixed to n.
/// Default domain for violation search is [-2 pi, 2 pi].
ProbeResult find_violation(std::string_view id, const PdFunction& f, int n,
                           const ProbeOptions& options);
ProbeOptions violation_defaults();

struct LimitRatio {
  double x = 0.0;
  double ratio = 0.0;
  /// 1 - u(x) fell below the cancellation guard; ratio is not meaningful.
  bool skipped = false;
};

/// (1 - u(2x)) / (1 - u(x)) along a strictly decreasing sequence of x > 1e-6.
/// Tends to 4 as x -> 0 for smooth u.
std::vector<LimitRatio> linnik_constant_probe(const PdFunction& u,
                                              const std::vector<double>& x_sequence);

}  // namespace pdlab
