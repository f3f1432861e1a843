#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace pdlab {

using Complex = std::complex<double>;

/// A complex-valued function on the real line together with the metadata the
/// inequality suite needs: whether it is real-valued and whether it comes from
/// a construction known to be positive definite.
///
/// Instances are immutable and cheap to copy; the evaluator is shared.
class PdFunction {
 public:
  using Evaluator = std::function<Complex(double)>;

  PdFunction(Evaluator evaluator, std::string label, bool is_real,
             bool is_certified_pd);

  Complex operator()(double x) const { return (*evaluator_)(x); }
  /// Real part of f(x); the "u" of the real-valued inequalities.
  double re(double x) const { return (*this)(x).real(); }
  /// f(0) as a real number. For a positive definite function this is the
  /// maximum of |f|.
  double at_zero() const { return re(0.0); }

  const std::string& label() const { return label_; }
  bool is_real() const { return is_real_; }
  bool is_certified_pd() const { return is_certified_pd_; }

 private:
  std::shared_ptr<const Evaluator> evaluator_;
  std::string label_;
  bool is_real_;
  bool is_certified_pd_;
};

/// Discrete probability measure on frequencies: f(x) = sum_j w_j exp(i t_j x).
struct DiscreteSpectralMeasure {
  std::vector<double> atoms;
  std::vector<double> weights;

  /// Throws InvalidMeasure unless weights are nonnegative, sum to 1 within
  /// 1e-12, and there is at least one finite atom.
  void validate() const;
  /// Every atom (t, w) has a partner (-t, w).
  bool is_symmetric(double tol = 1e-12) const;
};

PdFunction make_exponential(double frequency);
PdFunction make_cosine();
PdFunction make_gaussian();
/// max(c - |x|, 0); c > 0.
PdFunction make_tent(double c);
PdFunction make_const(double c);
PdFunction make_from_measure(const DiscreteSpectralMeasure& measure);

/// Wraps an arbitrary evaluator. The result is never flagged as certified,
/// so inequality reports on it carry expected_valid = false.
PdFunction make_user_function(PdFunction::Evaluator evaluator,
                              std::string label, bool is_real);

/// Pointwise nonnegative combination sum_k ws[k] * fs[k].
PdFunction combine_sum(std::span<const PdFunction> fs,
                       std::span<const double> ws);
PdFunction real_part(const PdFunction& f);
/// f / f(0), so the result has value 1 at the origin. Requires f(0) > 0.
PdFunction normalize(const PdFunction& f);

/// Symmetric random measure with 2k+1 atoms: one at 0 and k +-pairs with
/// frequencies in (0, max_frequency].
DiscreteSpectralMeasure random_symmetric_measure(int pairs, double max_frequency,
                                                 std::uint64_t seed);

/// Reads a measure from JSON: `[{"atom": t, "weight": w}, ...]`.
DiscreteSpectralMeasure load_measure_file(const std::string& path);
DiscreteSpectralMeasure parse_measure_json(std::string_view text);

/// Catalog grammar used by the CLI: `exp:a`, `cos`, `gauss`, `tent:c`,
/// `const:c`, `measure:<path>`.
struct FunctionSpec {
  enum class Kind { exponential, cosine, gaussian, tent, constant, measure };
  Kind kind;
  double parameter = 0.0;
  std::string path;
  std::string text;
};

/// Syntax check only; measure files are not opened.
FunctionSpec parse_function_spec(std::string_view text);
PdFunction make_function(const FunctionSpec& spec);
inline PdFunction make_function(std::string_view text) {
  return make_function(parse_function_spec(text));
}

/// Default spot-check window: `count` seeded uniform draws on [lo, hi].
Eigen::VectorXd sample_window(std::uint64_t seed, int count = 256,
                              double lo = -10.0, double hi = 10.0);

}  // namespace pdlab
