#include "lpbsa/annealing.hpp"

#include <cmath>

#include "lpbsa/operators.hpp"

namespace lpbsa {

TemperatureState make_temperature(double initial, double cooling_rate) {
  if (!(initial > 0.0)) {
    throw std::invalid_argument("TemperatureState: initial must be > 0");
  }
  if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) {
    throw std::invalid_argument(
        "TemperatureState: cooling_rate must lie in (0, 1)");
  }
  return TemperatureState{initial, cooling_rate, initial};
}

TemperatureState cool(TemperatureState temp) {
  temp.current *= temp.cooling_rate;
  return temp;
}

double acceptance_probability(double cost_new, double cost_current,
                              double temperature) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument(
        "acceptance_probability: temperature must be > 0");
  }
  if (!std::isfinite(cost_new) || !std::isfinite(cost_current)) {
    throw std::invalid_argument(
        "acceptance_probability: costs must be finite");
  }
  if (cost_new <= cost_current) {
    return 1.0;
  }
  return std::exp(-(cost_new - cost_current) / temperature);
}

bool metropolis_accepts(double cost_new, double cost_current,
                        double temperature, RngStream& rng) {
  if (cost_new <= cost_current) {
    return true;
  }
  return rng.uniform01() <
         acceptance_probability(cost_new, cost_current, temperature);
}

Individual metropolis_accept(const Individual& candidate,
                             const Individual& incumbent,
                             const TemperatureState& temp, RngStream& rng) {
  return metropolis_accepts(candidate.cost, incumbent.cost, temp.current, rng)
             ? candidate
             : incumbent;
}

RunTrace simulated_annealing(const ObjectiveSpec& spec,
                             const AlgorithmConfig& config, RngStream& rng) {
  validate_objective(spec);
  validate_config(config);

  RunTrace trace;
  trace.algorithm = "SA";
  trace.config_snapshot = config;

  Individual current = random_individual(spec, rng);
  ++trace.evaluations;
  if (!std::isfinite(current.cost)) {
    throw NonFiniteCostError(spec.name, 0, current.position);
  }
  Individual best = current;

  TemperatureState temp =
      make_temperature(config.initial_temperature, config.cooling_rate);
  trace.best_costs.reserve(static_cast<std::size_t>(config.max_iterations));

  for (int it = 1; it <= config.max_iterations; ++it) {
    Individual candidate;
    candidate.position = mutate_genes(current.position, 1, spec, rng);
    candidate.cost = spec.evaluate(candidate.position, rng);
    ++trace.evaluations;
    if (!std::isfinite(candidate.cost)) {
      throw NonFiniteCostError(spec.name, it, candidate.position);
    }

    ++trace.metropolis_tested;
    if (metropolis_accepts(candidate.cost, current.cost, temp.current, rng)) {
      ++trace.metropolis_accepted;
      current = std::move(candidate);
    }
    if (current.cost < best.cost) {
      best = current;
    }
    temp = cool(temp);
    trace.best_costs.push_back(best.cost);
  }

  trace.best_individual = std::move(best);
  return trace;
}

}  // namespace lpbsa
