#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdlab/gram.hpp"

namespace pdlab {

struct ScenarioAssertion {
  std::string description;
  double observed = 0.0;
  double expected = 0.0;
  bool pass = false;

  friend bool operator==(const ScenarioAssertion&, const ScenarioAssertion&) = default;
};

/// A named, re-runnable example. Passes iff every assertion passes.
struct ScenarioReport {
  std::string id;
  std::string narrative;
  std::vector<ScenarioAssertion> assertions;

  bool passed() const;
  friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

/// Two p.d. functions that agree on [-1, 1] but not on the whole line:
/// tent(2) and tent(1) + 1.
ScenarioReport tent_extension_demo(std::uint64_t seed = 0);

/// The multipoint inequalities with the wrong parity of n fail for cos at
/// x_k = pi, y_k = 0, and hold with the right parity at the same points.
ScenarioReport parity_counterexamples();

/// linnik-sq is an identity for cos.
ScenarioReport cos_equality_case(const PointConfig& xs);
PointConfig default_equality_points();

inline constexpr std::string_view kScenarioIds[] = {"tent-extension", "parity-failures",
                                                    "cos-equality"};

/// Runs a scenario by id with its default inputs. Throws InvalidParameter
/// for unknown ids.
ScenarioReport run_scenario(std::string_view id, std::uint64_t seed = 0);

}  // namespace pdlab
