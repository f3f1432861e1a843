#pragma once

#include <complex>
#include <string>
#include <vector>

namespace pdlab {

inline constexpr double kDefaultTolerance = 1e-9;

/// One named input of an inequality evaluation, e.g. {"x", {0.5}} or
/// {"xs", {1, 2, 3}}.
struct Param {
  std::string name;
  std::vector<double> values;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Outcome of evaluating one inequality lhs <= rhs at one configuration.
/// margin = rhs - lhs; a negative margin beyond tolerance is a violation.
struct MarginReport {
  std::string inequality_id;
  std::string function;
  std::vector<Param> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool holds = true;
  /// Whether the theory asserts the inequality here: the function is a
  /// certified p.d.f. and any parity condition on n is met.
  bool expected_valid = true;
  double tolerance = kDefaultTolerance;
  std::string note;

  friend bool operator==(const MarginReport&, const MarginReport&) = default;
};

MarginReport make_report(std::string id, std::string function, std::vector<Param> inputs,
                         double lhs, double rhs, bool expected_valid,
                         double tolerance = kDefaultTolerance);

/// A complex number of modulus one given by its angle in radians.
class UnimodularScalar {
 public:
  explicit UnimodularScalar(double theta);

  double theta() const { return theta_; }
  std::complex<double> value() const { return value_; }

 private:
  double theta_;
  std::complex<double> value_;
};

}  // namespace pdlab
