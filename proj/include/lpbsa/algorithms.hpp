// Population drivers. LPB evolves a cost-sorted population through tiered
// parent selection, blend crossover, and Gaussian mutation with elitist
// merge-and-truncate survival. LPBSA runs the identical skeleton but filters
// every offspring through Metropolis acceptance against its genetic source
// and cools the temperature once per iteration.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lpbsa/core.hpp"

namespace lpbsa {

/// Called after each iteration's survival step with the iteration number
/// (1-based) and the truncated population (sorted ascending by cost).
using ProgressObserver =
    std::function<void(int iteration, const std::vector<Individual>&)>;

/// One seeded LPB run. Per iteration: sort ascending by cost; compute
/// selection probabilities (selection_beta); divide the population by dp;
/// produce n_c = 2*round(pc*nPop/2) crossover offspring via select_parents +
/// crossover + clamp; produce n_m = round(pm*nPop) mutants by mutating
/// roulette-selected individuals; evaluate all offspring; merge parents and
/// offspring, sort, truncate to nPop; log the best cost.
/// Throws NonFiniteCostError if the objective ever returns NaN or infinity.
RunTrace lpb_run(const ObjectiveSpec& spec, const AlgorithmConfig& config,
                 RngStream& rng, const ProgressObserver& observer = {});

/// One seeded LPBSA run: the lpb_run skeleton with Metropolis filtering.
/// Crossover offspring must pass acceptance against their first parent,
/// mutants against their pre-mutation source; rejected candidates are
/// evaluated but contribute nothing to the offspring pool (the incumbent
/// already sits in the parent population). The temperature cools once per
/// iteration.
RunTrace lpbsa_run(const ObjectiveSpec& spec, const AlgorithmConfig& config,
                   RngStream& rng, const ProgressObserver& observer = {});

/// Runs one replicate of "LPB", "LPBSA", or "SA" with the given seed (the
/// config's seed field is overwritten so the trace snapshot records it).
/// Throws std::invalid_argument for an unknown algorithm name.
RunTrace run_single(const ObjectiveSpec& spec, AlgorithmConfig config,
                    const std::string& algorithm, std::uint64_t seed);

/// n_runs independent replicates with seeds base_seed + 0 .. n_runs - 1.
/// Replicate i is identical whether run alone or in a batch.
std::vector<RunTrace> run_replicates(const ObjectiveSpec& spec,
                                     const AlgorithmConfig& config,
                                     const std::string& algorithm, int n_runs,
                                     std::uint64_t base_seed);

}  // namespace lpbsa
