#include "lpbsa/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "lpbsa/annealing.hpp"
#include "lpbsa/operators.hpp"

namespace lpbsa {

namespace {

bool cost_less(const Individual& a, const Individual& b) {
  return a.cost < b.cost;
}

double checked_eval(const ObjectiveSpec& spec, const SolutionVector& position,
                    RngStream& rng, int iteration, RunTrace& trace) {
  const double cost = spec.evaluate(position, rng);
  ++trace.evaluations;
  if (!std::isfinite(cost)) {
    throw NonFiniteCostError(spec.name, iteration, position);
  }
  return cost;
}

/// Shared generation loop; `annealed` switches the LPBSA differences on.
RunTrace population_run(const ObjectiveSpec& spec,
                        const AlgorithmConfig& config, RngStream& rng,
                        bool annealed, const char* algorithm,
                        const ProgressObserver& observer) {
  validate_objective(spec);
  validate_config(config);

  RunTrace trace;
  trace.algorithm = algorithm;
  trace.config_snapshot = config;

  const int n_pop = config.population_size;
  std::vector<Individual> pop;
  pop.reserve(static_cast<std::size_t>(n_pop));
  for (int i = 0; i < n_pop; ++i) {
    Individual ind;
    ind.position.resize(spec.dimension);
    for (int g = 0; g < spec.dimension; ++g) {
      ind.position[g] =
          rng.uniform(spec.lower_bounds[g], spec.upper_bounds[g]);
    }
    ind.cost = checked_eval(spec, ind.position, rng, 0, trace);
    pop.push_back(std::move(ind));
  }
  std::stable_sort(pop.begin(), pop.end(), cost_less);

  const int n_c = 2 * static_cast<int>(std::lround(
                          config.pc * static_cast<double>(n_pop) / 2.0));
  const int n_m = static_cast<int>(
      std::lround(config.pm * static_cast<double>(n_pop)));
  const int n_mut = static_cast<int>(
      std::ceil(config.mu * static_cast<double>(spec.dimension)));

  TemperatureState temp =
      make_temperature(config.initial_temperature, config.cooling_rate);
  trace.best_costs.reserve(static_cast<std::size_t>(config.max_iterations));

  std::vector<double> costs(static_cast<std::size_t>(n_pop));
  std::vector<Individual> pool;

  for (int it = 1; it <= config.max_iterations; ++it) {
    for (int i = 0; i < n_pop; ++i) {
      costs[static_cast<std::size_t>(i)] = pop[static_cast<std::size_t>(i)].cost;
    }
    const std::vector<double> probs =
        selection_probabilities(costs, config.selection_beta);
    const PopulationPartition partition = divide_population(pop, config.dp);

    pool.clear();
    for (int pair = 0; pair < n_c / 2; ++pair) {
      const auto [parent1, parent2] = select_parents(partition, probs, rng);
      auto [child1, child2] =
          crossover(parent1.position, parent2.position, config.gamma, rng);
      for (SolutionVector* child : {&child1, &child2}) {
        Individual candidate;
        candidate.position = clamp_to_bounds(*child, spec);
        candidate.cost = checked_eval(spec, candidate.position, rng, it, trace);
        bool keep = true;
        if (annealed) {
          ++trace.metropolis_tested;
          keep = metropolis_accepts(candidate.cost, parent1.cost,
                                    temp.current, rng);
          if (keep) {
            ++trace.metropolis_accepted;
          }
        }
        if (keep) {
          pool.push_back(std::move(candidate));
        }
      }
    }

    for (int m = 0; m < n_m; ++m) {
      const std::size_t source = roulette_select(probs, rng);
      Individual candidate;
      candidate.position = mutate_genes(pop[source].position, n_mut, spec, rng);
      candidate.cost = checked_eval(spec, candidate.position, rng, it, trace);
      bool keep = true;
      if (annealed) {
        ++trace.metropolis_tested;
        keep = metropolis_accepts(candidate.cost, pop[source].cost,
                                  temp.current, rng);
        if (keep) {
          ++trace.metropolis_accepted;
        }
      }
      if (keep) {
        pool.push_back(std::move(candidate));
      }
    }

    if (annealed) {
      temp = cool(temp);
    }

    pop.insert(pop.end(), std::make_move_iterator(pool.begin()),
               std::make_move_iterator(pool.end()));
    std::stable_sort(pop.begin(), pop.end(), cost_less);
    pop.resize(static_cast<std::size_t>(n_pop));
    trace.best_costs.push_back(pop.front().cost);
    if (observer) {
      observer(it, pop);
    }
  }

  trace.best_individual = pop.front();
  return trace;
}

}  // namespace

RunTrace lpb_run(const ObjectiveSpec& spec, const AlgorithmConfig& config,
                 RngStream& rng, const ProgressObserver& observer) {
  return population_run(spec, config, rng, /*annealed=*/false, "LPB",
                        observer);
}

RunTrace lpbsa_run(const ObjectiveSpec& spec, const AlgorithmConfig& config,
                   RngStream& rng, const ProgressObserver& observer) {
  return population_run(spec, config, rng, /*annealed=*/true, "LPBSA",
                        observer);
}

RunTrace run_single(const ObjectiveSpec& spec, AlgorithmConfig config,
                    const std::string& algorithm, std::uint64_t seed) {
  config.seed = seed;
  Mt64Stream rng(seed);
  if (algorithm == "LPB") {
    return lpb_run(spec, config, rng);
  }
  if (algorithm == "LPBSA") {
    return lpbsa_run(spec, config, rng);
  }
  if (algorithm == "SA") {
    return simulated_annealing(spec, config, rng);
  }
  throw std::invalid_argument("unknown algorithm '" + algorithm +
                              "' (expected LPB, LPBSA, or SA)");
}

std::vector<RunTrace> run_replicates(const ObjectiveSpec& spec,
                                     const AlgorithmConfig& config,
                                     const std::string& algorithm, int n_runs,
                                     std::uint64_t base_seed) {
  if (n_runs < 1) {
    throw std::invalid_argument("run_replicates: n_runs must be >= 1");
  }
  std::vector<RunTrace> traces;
  traces.reserve(static_cast<std::size_t>(n_runs));
  for (int i = 0; i < n_runs; ++i) {
    traces.push_back(run_single(spec, config, algorithm,
                                base_seed + static_cast<std::uint64_t>(i)));
  }
  return traces;
}

}  // namespace lpbsa
