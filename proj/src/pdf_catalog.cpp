#include "pdlab/pdf_catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

double parse_real(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw InvalidParameter("malformed number '" + std::string(text) +
                           "' in " + std::string(what));
  }
  return value;
}

}  // namespace

PdFunction::PdFunction(Evaluator evaluator, std::string label, bool is_real,
                       bool is_certified_pd)
    : evaluator_(std::make_shared<const Evaluator>(std::move(evaluator))),
      label_(std::move(label)),
      is_real_(is_real),
      is_certified_pd_(is_certified_pd) {}

void DiscreteSpectralMeasure::validate() const {
  if (atoms.empty()) throw InvalidMeasure("measure has no atoms");
  if (atoms.size() != weights.size()) {
    throw InvalidMeasure("measure has " + std::to_string(atoms.size()) +
                         " atoms but " + std::to_string(weights.size()) +
                         " weights");
  }
  for (double t : atoms) {
    if (!std::isfinite(t)) throw InvalidMeasure("non-finite atom");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidMeasure("negative or non-finite weight " + format_number(w));
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw InvalidMeasure("weights sum to " + format_number(total) +
                         ", expected 1");
  }
}

bool DiscreteSpectralMeasure::is_symmetric(double tol) const {
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    bool matched = false;
    for (std::size_t k = 0; k < atoms.size() && !matched; ++k) {
      matched = std::abs(atoms[k] + atoms[j]) <= tol &&
                std::abs(weights[k] - weights[j]) <= tol;
    }
    if (!matched) return false;
  }
  return true;
}

PdFunction make_exponential(double frequency) {
  return PdFunction([frequency](double x) { return std::polar(1.0, frequency * x); },
                    "exp:" + format_number(frequency), frequency == 0.0, true);
}

PdFunction make_cosine() {
  return PdFunction([](double x) { return Complex(std::cos(x), 0.0); }, "cos",
                    true, true);
}

PdFunction make_gaussian() {
  return PdFunction([](double x) { return Complex(std::exp(-x * x), 0.0); },
                    "gauss", true, true);
}

PdFunction make_tent(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidParameter("tent width must be positive, got " + format_number(c));
  }
  return PdFunction(
      [c](double x) { return Complex(std::max(c - std::abs(x), 0.0), 0.0); },
      "tent:" + format_number(c), true, true);
}

PdFunction make_const(double c) {
  if (!(c >= 0.0) || !std::isfinite(c)) {
    throw InvalidParameter("constant must be nonnegative, got " + format_number(c));
  }
  return PdFunction([c](double) { return Complex(c, 0.0); },
                    "const:" + format_number(c), true, true);
}

PdFunction make_from_measure(const DiscreteSpectralMeasure& measure) {
  measure.validate();
  const bool symmetric = measure.is_symmetric();
  auto atoms = measure.atoms;
  auto weights = measure.weights;
  std::string label = "measure[" + std::to_string(atoms.size()) + "]";
  if (symmetric) {
    // Paired atoms cancel the sine terms exactly.
    return PdFunction(
        [atoms, weights](double x) {
          double sum = 0.0;
          for (std::size_t j = 0; j < atoms.size(); ++j) {
            sum += weights[j] * std::cos(atoms[j] * x);
          }
          return Complex(sum, 0.0);
        },
        std::move(label), true, true);
  }
  return PdFunction(
      [atoms, weights](double x) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j < atoms.size(); ++j) {
          sum += weights[j] * std::polar(1.0, atoms[j] * x);
        }
        return sum;
      },
      std::move(label), false, true);
}

PdFunction make_user_function(PdFunction::Evaluator evaluator, std::string label,
                              bool is_real) {
  return PdFunction(std::move(evaluator), std::move(label), is_real, false);
}

PdFunction combine_sum(std::span<const PdFunction> fs, std::span<const double> ws) {
  if (fs.empty()) throw InvalidParameter("combine_sum needs at least one function");
  if (fs.size() != ws.size()) {
    throw LengthMismatch("combine_sum: " + std::to_string(fs.size()) +
                         " functions but " + std::to_string(ws.size()) + " weights");
  }
  bool is_real = true;
  bool certified = true;
  std::string label = "sum(";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (!(ws[k] >= 0.0) || !std::isfinite(ws[k])) {
      throw InvalidParameter("combine_sum: negative weight " + format_number(ws[k]));
    }
    is_real = is_real && fs[k].is_real();
    certified = certified && fs[k].is_certified_pd();
    if (k > 0) label += ",";
    label += format_number(ws[k]) + "*" + fs[k].label();
  }
  label += ")";
  std::vector<PdFunction> parts(fs.begin(), fs.end());
  std::vector<double> weights(ws.begin(), ws.end());
  return PdFunction(
      [parts = std::move(parts), weights = std::move(weights)](double x) {
        Complex sum = 0.0;
        for (std::size_t k = 0; k < parts.size(); ++k) sum += weights[k] * parts[k](x);
        return sum;
      },
      std::move(label), is_real, certified);
}

PdFunction real_part(const PdFunction& f) {
  return PdFunction([f](double x) { return Complex(f.re(x), 0.0); },
                    "re(" + f.label() + ")", true, f.is_certified_pd());
}

PdFunction normalize(const PdFunction& f) {
  const double origin = f.at_zero();
  if (!(origin > 0.0)) {
    throw InvalidParameter("cannot normalize " + f.label() + ": f(0) = " +
                           format_number(origin));
  }
  if (origin == 1.0) return f;
  const PdFunction parts[] = {f};
  const double weights[] = {1.0 / origin};
  return combine_sum(parts, weights);
}

DiscreteSpectralMeasure random_symmetric_measure(int pairs, double max_frequency,
                                                 std::uint64_t seed) {
  if (pairs < 0) throw InvalidParameter("pair count must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> freq(0.0, max_frequency);
  std::uniform_real_distribution<double> mass(0.1, 1.0);
  std::vector<double> raw;
  DiscreteSpectralMeasure m;
  m.atoms.push_back(0.0);
  raw.push_back(mass(rng));
  for (int k = 0; k < pairs; ++k) {
    double t = freq(rng);
    if (t == 0.0) t = max_frequency;
    const double w = mass(rng);
    m.atoms.push_back(t);
    m.atoms.push_back(-t);
    raw.push_back(w);
    raw.push_back(w);
  }
  const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
  for (double w : raw) m.weights.push_back(w / total);
  // Renormalizing can leave the sum a few ulps off 1; fold the residue into
  // the zero atom so pairs stay exactly equal.
  const double residue =
      1.0 - std::accumulate(m.weights.begin(), m.weights.end(), 0.0);
  m.weights.front() += residue;
  return m;
}

DiscreteSpectralMeasure parse_measure_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidMeasure(std::string("measure JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidMeasure("measure JSON must be an array");
  DiscreteSpectralMeasure m;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("atom") || !entry.contains("weight") ||
        !entry["atom"].is_number() || !entry["weight"].is_number()) {
      throw InvalidMeasure("measure entries must be {\"atom\": t, \"weight\": w}");
    }
    m.atoms.push_back(entry["atom"].get<double>());
    m.weights.push_back(entry["weight"].get<double>());
  }
  m.validate();
  return m;
}

DiscreteSpectralMeasure load_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidMeasure("cannot open measure file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_measure_json(buffer.str());
}

FunctionSpec parse_function_spec(std::string_view text) {
  FunctionSpec spec;
  spec.text = std::string(text);
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;

  auto require_arg = [&]() {
    if (!has_arg || tail.empty()) {
      throw InvalidParameter("function spec '" + spec.text + "' needs a parameter");
    }
  };
  auto forbid_arg = [&]() {
    if (has_arg) {
      throw InvalidParameter("function spec '" + spec.text + "' takes no parameter");
    }
  };

  if (head == "exp") {
    require_arg();
    spec.kind = FunctionSpec::Kind::exponential;
    spec.parameter = parse_real(tail, "function spec");
  } else if (head == "cos") {
    forbid_arg();
    spec.kind = FunctionSpec::Kind::cosine;
  } else if (head == "gauss") {
    forbid_arg();
    spec.kind = FunctionSpec::Kind::gaussian;
  } else if (head == "tent") {
    require_arg();
    spec.kind = FunctionSpec::Kind::tent;
    spec.parameter = parse_real(tail, "function spec");
    if (!(spec.parameter > 0.0)) {
      throw InvalidParameter("tent width must be positive in '" + spec.text + "'");
    }
  } else if (head == "const") {
    require_arg();
    spec.kind = FunctionSpec::Kind::constant;
    spec.parameter = parse_real(tail, "function spec");
    if (spec.parameter < 0.0) {
      throw InvalidParameter("constant must be nonnegative in '" + spec.text + "'");
    }
  } else if (head == "measure") {
    require_arg();
    spec.kind = FunctionSpec::Kind::measure;
    spec.path = std::string(tail);
  } else {
    throw InvalidParameter("unknown function spec '" + spec.text + "'");
  }
  return spec;
}

PdFunction make_function(const FunctionSpec& spec) {
  switch (spec.kind) {
    case FunctionSpec::Kind::exponential:
      return make_exponential(spec.parameter);
    case FunctionSpec::Kind::cosine:
      return make_cosine();
    case FunctionSpec::Kind::gaussian:
      return make_gaussian();
    case FunctionSpec::Kind::tent:
      return make_tent(spec.parameter);
    case FunctionSpec::Kind::constant:
      return make_const(spec.parameter);
    case FunctionSpec::Kind::measure:
      return make_from_measure(load_measure_file(spec.path));
  }
  throw InvalidParameter("unhandled function spec kind");
}

Eigen::VectorXd sample_window(std::uint64_t seed, int count, double lo, double hi) {
  if (count < 1 || !(hi > lo)) throw InvalidParameter("empty sampling window");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(lo, hi);
  Eigen::VectorXd xs(count);
  for (auto& x : xs) x = uniform(rng);
  return xs;
}

}  // namespace pdlab
