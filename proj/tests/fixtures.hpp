#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "pdlab/inequalities.hpp"
#include "pdlab/pdf_catalog.hpp"

namespace pdlab::testing {

/// The catalog exercised by property tests and the acceptance suite.
inline std::vector<PdFunction> catalog() {
  return {make_exponential(1.0),
          make_exponential(2.0),
          make_cosine(),
          make_gaussian(),
          make_tent(1.0),
          make_tent(2.0),
          make_const(1.0),
          make_from_measure(random_symmetric_measure(2, 3.0, 101)),
          make_from_measure(random_symmetric_measure(2, 3.0, 202))};
}

inline std::vector<double> uniform_points(std::mt19937_64& rng, int n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(n);
  for (auto& x : out) x = u(rng);
  return out;
}

/// Adapts a catalog function to the preconditions of `id`: Re f for the
/// real-only inequalities, Re f / f(0) for the normalized ones.
inline PdFunction adapt_for(std::string_view id, const PdFunction& f) {
  const bool needs_real = id == ids::linnik || id == ids::mp_minus;
  const bool needs_normalized = id == ids::linnik_sq || id == ids::linnik_shift ||
                                id == ids::linnik_iter || id == ids::linnik_refined ||
                                id == ids::mp_mixed || id == ids::mp_plus;
  if (needs_normalized) return normalize(f.is_real() ? f : real_part(f));
  if (needs_real && !f.is_real()) return real_part(f);
  return f;
}

/// One random evaluation of a single-report inequality: points in [-10, 10],
/// n in 1..6, m in 1..5, theta in [-pi, pi], t in [-5, 5].
inline MarginReport random_report(std::string_view id, const PdFunction& f,
                                  std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(1, 6);
  std::uniform_int_distribution<int> m_dist(1, 5);
  std::uniform_real_distribution<double> angle(-3.141592653589793, 3.141592653589793);
  std::uniform_real_distribution<double> freq(-5.0, 5.0);
  std::bernoulli_distribution coin;
  InequalityArgs args;
  const int n = n_dist(rng);
  args.xs = uniform_points(rng, n, -10.0, 10.0);
  args.ys = uniform_points(rng, n, -10.0, 10.0);
  args.m = m_dist(rng);
  args.theta = angle(rng);
  args.t = freq(rng);
  args.variant = coin(rng) ? TrigVariant::sin_lhs : TrigVariant::cos_lhs;
  return evaluate(id, f, args);
}

/// Known quasi-periods of catalog functions: exp:a has f(k pi / a) =
/// e^{i k pi}; cos has cos(k pi) = (-1)^k. Returns false for other functions.
inline bool quasi_period_for(const PdFunction& f, int k, double& period, double& theta) {
  const double pi = 3.141592653589793;
  if (f.label() == "cos") {
    period = k * pi;
    theta = k * pi;
    return true;
  }
  if (f.label().rfind("exp:", 0) == 0) {
    const double a = std::stod(f.label().substr(4));
    period = k * pi / a;
    theta = k * pi;
    return true;
  }
  return false;
}

// --- Independent oracles ----------------------------------------------------

/// Roots of det(A - lambda I) for a real symmetric 3x3 matrix, by bisection on
/// the characteristic cubic. Does not touch Eigen's solvers.
inline std::vector<double> symmetric3_eigenvalues(const double a[3][3]) {
  const double tr = a[0][0] + a[1][1] + a[2][2];
  const double minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] -
                        a[0][2] * a[2][0] + a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  // p(l) = -l^3 + tr l^2 - minors l + det
  auto p = [&](double l) { return -l * l * l + tr * l * l - minors * l + det; };
  double bound = 1.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) bound += std::abs(a[i][j]);
  }
  // Scan for sign changes, then bisect; also accept exact zeros on the grid.
  // A root on a cell boundary can be found from both sides, so near
  // duplicates are merged. Repeated eigenvalues are out of scope.
  std::vector<double> roots;
  auto add = [&](double r) {
    if (roots.empty() || std::abs(r - roots.back()) > 1e-6) roots.push_back(r);
  };
  const int steps = 6000;
  const double h = 2.0 * bound / steps;
  for (int k = 0; k < steps && roots.size() < 3; ++k) {
    double lo = -bound + k * h;
    double hi = lo + h;
    double plo = p(lo);
    const double phi = p(hi);
    if (plo == 0.0) {
      add(lo);
      continue;
    }
    if ((plo < 0.0) == (phi < 0.0)) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double pm = p(mid);
      if ((pm < 0.0) == (plo < 0.0)) {
        lo = mid;
        plo = pm;
      } else {
        hi = mid;
      }
    }
    add(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace pdlab::testing
