#include "lpbsa/core.hpp"

#include <cmath>
#include <sstream>

namespace lpbsa {

namespace {

bool all_finite(const SolutionVector& v) {
  return v.allFinite();
}

std::string format_position(const SolutionVector& position) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < position.size(); ++i) {
    if (i > 0) {
      os << ", ";
    }
    os << position[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

void validate_objective(const ObjectiveSpec& spec) {
  if (spec.dimension < 1) {
    throw std::invalid_argument("ObjectiveSpec: dimension must be >= 1");
  }
  if (spec.lower_bounds.size() != spec.dimension) {
    throw std::invalid_argument(
        "ObjectiveSpec: lower_bounds length must equal dimension");
  }
  if (spec.upper_bounds.size() != spec.dimension) {
    throw std::invalid_argument(
        "ObjectiveSpec: upper_bounds length must equal dimension");
  }
  if (!all_finite(spec.lower_bounds) || !all_finite(spec.upper_bounds)) {
    throw std::invalid_argument("ObjectiveSpec: bounds must be finite");
  }
  for (Eigen::Index i = 0; i < spec.lower_bounds.size(); ++i) {
    if (spec.lower_bounds[i] > spec.upper_bounds[i]) {
      throw std::invalid_argument(
          "ObjectiveSpec: lower_bounds must not exceed upper_bounds");
    }
  }
  if (!spec.evaluate) {
    throw std::invalid_argument("ObjectiveSpec: evaluate callback is empty");
  }
}

AlgorithmConfig lpbsa_defaults() {
  return AlgorithmConfig{};
}

AlgorithmConfig lpb_defaults() {
  AlgorithmConfig config;
  config.pc = 0.6;
  config.pm = 0.3;
  config.dp = 0.5;
  return config;
}

void validate_config(const AlgorithmConfig& config) {
  if (config.max_iterations < 0) {
    throw std::invalid_argument("AlgorithmConfig: max_iterations must be >= 0");
  }
  if (config.population_size < 1) {
    throw std::invalid_argument(
        "AlgorithmConfig: population_size must be >= 1");
  }
  if (!(config.pc >= 0.0 && config.pc <= 1.0)) {
    throw std::invalid_argument("AlgorithmConfig: pc must lie in [0, 1]");
  }
  if (!(config.pm >= 0.0 && config.pm <= 1.0)) {
    throw std::invalid_argument("AlgorithmConfig: pm must lie in [0, 1]");
  }
  if (!(config.gamma >= 0.0) || !std::isfinite(config.gamma)) {
    throw std::invalid_argument(
        "AlgorithmConfig: gamma must be finite and >= 0");
  }
  if (!(config.mu >= 0.0 && config.mu <= 1.0)) {
    throw std::invalid_argument("AlgorithmConfig: mu must lie in [0, 1]");
  }
  if (!(config.dp > 0.0 && config.dp < 1.0)) {
    throw std::invalid_argument("AlgorithmConfig: dp must lie in (0, 1)");
  }
  if (!(config.selection_beta > 0.0) || !std::isfinite(config.selection_beta)) {
    throw std::invalid_argument(
        "AlgorithmConfig: selection_beta must be finite and > 0");
  }
  if (!(config.cooling_rate > 0.0 && config.cooling_rate < 1.0)) {
    throw std::invalid_argument(
        "AlgorithmConfig: cooling_rate must lie in (0, 1)");
  }
  // +infinity is allowed: it is the accept-everything limit of the
  // acceptance rule and useful as a test hook. NaN and non-positives are not.
  if (!(config.initial_temperature > 0.0)) {
    throw std::invalid_argument(
        "AlgorithmConfig: initial_temperature must be > 0");
  }
}

SolutionVector clamp_to_bounds(const SolutionVector& v,
                               const ObjectiveSpec& spec) {
  if (v.size() != spec.dimension) {
    throw std::invalid_argument(
        "clamp_to_bounds: vector length must equal spec dimension");
  }
  return v.cwiseMax(spec.lower_bounds).cwiseMin(spec.upper_bounds);
}

Individual random_individual(const ObjectiveSpec& spec, RngStream& rng) {
  Individual ind;
  ind.position.resize(spec.dimension);
  for (int i = 0; i < spec.dimension; ++i) {
    ind.position[i] = rng.uniform(spec.lower_bounds[i], spec.upper_bounds[i]);
  }
  ind.cost = spec.evaluate(ind.position, rng);
  return ind;
}

NonFiniteCostError::NonFiniteCostError(const std::string& context,
                                       int iteration, SolutionVector position)
    : std::runtime_error("non-finite cost from objective '" + context +
                         "' at iteration " + std::to_string(iteration) +
                         ", position " + format_position(position)),
      iteration_(iteration),
      position_(std::move(position)) {}

}  // namespace lpbsa
