#include "pdlab/margin_report.hpp"

#include <cmath>

#include "pdlab/errors.hpp"

namespace pdlab {

MarginReport make_report(std::string id, std::string function, std::vector<Param> inputs,
                         double lhs, double rhs, bool expected_valid, double tolerance) {
  MarginReport r;
  r.inequality_id = std::move(id);
  r.function = std::move(function);
  r.inputs = std::move(inputs);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = rhs - lhs;
  r.holds = r.margin >= -tolerance;
  r.expected_valid = expected_valid;
  r.tolerance = tolerance;
  return r;
}

UnimodularScalar::UnimodularScalar(double theta)
    : theta_(theta), value_(std::polar(1.0, theta)) {
  if (!std::isfinite(theta)) throw InvalidParameter("theta must be finite");
}

}  // namespace pdlab
