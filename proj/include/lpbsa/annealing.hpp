// Geometric temperature schedule and the Metropolis acceptance rule, usable
// standalone (classic single-solution annealer) or embedded in the hybrid
// population driver.
#pragma once

#include "lpbsa/core.hpp"

namespace lpbsa {

/// Geometric cooling state: after t update steps current = initial * rate^t.
struct TemperatureState {
  double current = 0.0;
  double cooling_rate = 0.0;
  double initial = 0.0;
};

/// Builds a schedule starting at `initial` (must be > 0; +infinity is the
/// accept-everything limit) with multiplicative `cooling_rate` in (0, 1).
/// Throws std::invalid_argument otherwise.
TemperatureState make_temperature(double initial, double cooling_rate);

/// One cooling step: current <- current * cooling_rate.
TemperatureState cool(TemperatureState temp);

/// Probability of accepting a candidate with cost `cost_new` against an
/// incumbent with cost `cost_current`: 1 when not worse, otherwise
/// exp(-(cost_new - cost_current) / temperature). Throws
/// std::invalid_argument unless temperature > 0 and both costs are finite.
double acceptance_probability(double cost_new, double cost_current,
                              double temperature);

/// Metropolis draw: always true for a non-worsening candidate (consumes no
/// randomness); otherwise true with acceptance_probability, consuming one
/// uniform draw.
bool metropolis_accepts(double cost_new, double cost_current,
                        double temperature, RngStream& rng);

/// Individual-level convenience: returns the candidate when accepted, the
/// incumbent otherwise.
Individual metropolis_accept(const Individual& candidate,
                             const Individual& incumbent,
                             const TemperatureState& temp, RngStream& rng);

/// Classic single-solution simulated annealing: random start, one-gene
/// Gaussian neighbor per iteration, Metropolis acceptance, one cooling step
/// per iteration, fixed iteration count. The trace records the best cost
/// found so far after each iteration (monotone non-increasing).
RunTrace simulated_annealing(const ObjectiveSpec& spec,
                             const AlgorithmConfig& config, RngStream& rng);

}  // namespace lpbsa
