// Core domain types shared by every other module: solution vectors, evaluated
// individuals, objective descriptions, algorithm configuration, and the
// deterministic RNG contract that makes every run bit-reproducible.
#pragma once

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpbsa {

inline constexpr const char* kVersion = "1.0.0";

/// A candidate solution: one real value per decision variable.
using SolutionVector = Eigen::VectorXd;

/// Deterministic pseudorandom stream. All randomness in the library flows
/// through this interface so that a run is reproducible from its seed and so
/// tests can substitute scripted streams. The derived-value transforms are
/// defined here, non-virtually, to pin the exact draw count and arithmetic of
/// each helper: identical raw streams imply identical derived sequences.
class RngStream {
 public:
  virtual ~RngStream() = default;

  /// Next raw 64-bit word from the underlying generator.
  virtual std::uint64_t next_u64() = 0;

  /// Uniform double in [0, 1) with 53-bit resolution. Consumes one word.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi). Consumes one word. lo == hi returns lo.
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Standard normal deviate via Box-Muller. Consumes exactly two words
  /// (no cached spare), except in the measure-zero case uniform01() == 0,
  /// which is redrawn.
  double normal01() {
    double u1 = uniform01();
    while (u1 <= 0.0) {
      u1 = uniform01();
    }
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform index in [0, n). Consumes one word. Requires n >= 1.
  std::size_t index(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("RngStream::index: n must be >= 1");
    }
    const auto i = static_cast<std::size_t>(uniform01() *
                                            static_cast<double>(n));
    return i < n ? i : n - 1;
  }
};

/// Production RNG: one Mersenne-Twister-64 stream per run, seeded from the
/// run's 64-bit seed.
class Mt64Stream final : public RngStream {
 public:
  explicit Mt64Stream(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next_u64() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Objective callback. Deterministic functions ignore the stream; the
/// quartic-with-noise benchmark draws its noise from it so that noise is
/// run-local and reproducible.
using ObjectiveFn = std::function<double(const SolutionVector&, RngStream&)>;

/// Description of one optimization problem: box bounds plus cost callback.
struct ObjectiveSpec {
  std::string name;
  int dimension = 0;
  SolutionVector lower_bounds;
  SolutionVector upper_bounds;
  ObjectiveFn evaluate;
  /// Best known objective value, when documented.
  std::optional<double> known_optimum;
  /// Point attaining known_optimum, when documented.
  std::optional<SolutionVector> optimizer;
};

/// Validates structural invariants of a spec; throws std::invalid_argument
/// naming the offending field. Zero-width intervals (lower == upper) are
/// permitted as degenerate but valid search spaces.
void validate_objective(const ObjectiveSpec& spec);

/// A solution paired with its cached objective cost.
struct Individual {
  SolutionVector position;
  double cost = 0.0;
};

/// Every tunable of the population drivers and the annealer. Defaults are the
/// LPBSA settings; lpb_defaults() switches the rates used by the baseline.
struct AlgorithmConfig {
  int max_iterations = 1000;
  int population_size = 30;
  double pc = 0.8;                    ///< crossover pool fraction
  double pm = 0.8;                    ///< mutation pool fraction
  double gamma = 0.6;                 ///< blend-crossover extension
  double mu = 0.03;                   ///< per-gene mutation rate
  double dp = 0.90;                   ///< divide probability (elite fraction)
  double selection_beta = 1.0;        ///< fitness-scaling sharpness
  double cooling_rate = 0.99;
  double initial_temperature = 100.0; ///< may be +infinity (accept-all hook)
  std::uint64_t seed = 0;
};

/// LPBSA settings: pc = pm = 0.8, dp = 0.90.
AlgorithmConfig lpbsa_defaults();

/// Baseline settings: pc = 0.6, pm = 0.3, dp = 0.5.
AlgorithmConfig lpb_defaults();

/// Throws std::invalid_argument naming the offending field when any value is
/// outside its documented range. max_iterations = 0 is a valid empty run.
void validate_config(const AlgorithmConfig& config);

/// Componentwise projection onto [lower_i, upper_i]; in-bounds input is
/// returned unchanged. Throws std::invalid_argument on dimension mismatch.
SolutionVector clamp_to_bounds(const SolutionVector& v,
                               const ObjectiveSpec& spec);

/// Uniform random position within bounds, evaluated once.
Individual random_individual(const ObjectiveSpec& spec, RngStream& rng);

/// Thrown when an objective returns NaN or infinity mid-run; carries the
/// iteration (0 = initialization) and the offending position.
class NonFiniteCostError : public std::runtime_error {
 public:
  NonFiniteCostError(const std::string& context, int iteration,
                     SolutionVector position);
  int iteration() const noexcept { return iteration_; }
  const SolutionVector& position() const noexcept { return position_; }

 private:
  int iteration_;
  SolutionVector position_;
};

/// Complete record of one seeded run: best cost after each iteration, the
/// final best individual, and bookkeeping counters.
struct RunTrace {
  std::vector<double> best_costs;      ///< length == max_iterations
  Individual best_individual;
  std::int64_t evaluations = 0;        ///< objective-call count
  std::int64_t metropolis_tested = 0;  ///< candidates put to the acceptance rule
  std::int64_t metropolis_accepted = 0;
  std::string algorithm;
  AlgorithmConfig config_snapshot;
};

}  // namespace lpbsa
