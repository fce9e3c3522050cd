// Evolutionary operators: fitness-scaled selection probabilities, roulette
// draws, cost-tier population division, blend crossover, and Gaussian
// mutation. All operators are pure given an explicit RngStream, and their
// draw order is part of the contract (runs replay bit-exactly from a seed).
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lpbsa/core.hpp"

namespace lpbsa {

/// Maps costs to selection probabilities p_i proportional to
/// exp(-beta * c_i / c_worst), where c_worst is the maximum cost. When
/// c_worst <= 0 every cost is first shifted by 1 + |min cost| so the divisor
/// is positive. Lower cost always receives strictly higher probability when
/// costs differ; the result sums to 1.
/// Throws std::invalid_argument on an empty list or non-finite cost.
std::vector<double> selection_probabilities(const std::vector<double>& costs,
                                            double beta);

/// Draws an index with the given probabilities (which must sum to 1 within
/// 1e-9). Consumes exactly one uniform draw: the first index whose cumulative
/// probability exceeds the draw wins; rounding shortfall falls to the last.
std::size_t roulette_select(const std::vector<double>& probabilities,
                            RngStream& rng);

/// Cost-ordered tiers of a sorted population. The tiers partition the input:
/// concatenating perfect, good, worst restores it.
struct PopulationPartition {
  std::vector<Individual> perfect;
  std::vector<Individual> good;
  std::vector<Individual> worst;
};

/// Splits a population sorted ascending by cost. With n = pop.size() and
/// k = floor(dp * n): perfect = pop[0 .. ceil(k/2)), good = pop[ceil(k/2)
/// .. k), worst = pop[k .. n). Throws std::invalid_argument on an empty or
/// unsorted population or dp outside (0, 1).
PopulationPartition divide_population(const std::vector<Individual>& pop,
                                      double dp);

/// Picks two parents. The first is drawn by roulette restricted to the elite
/// pool (perfect followed by good; when both tiers are empty the worst tier
/// is the pool), with the restricted probabilities renormalized. The second
/// is drawn over the full population with the first parent excluded and the
/// remaining mass renormalized, so the parents can coincide only when the
/// eligible pool has a single member. `probabilities` must align with the
/// concatenation perfect + good + worst. With both_from_elite the second
/// draw is restricted to the same elite pool as the first.
std::pair<Individual, Individual> select_parents(
    const PopulationPartition& partition,
    const std::vector<double>& probabilities, RngStream& rng,
    bool both_from_elite = false);

/// Extended arithmetic (blend) crossover: for each gene an independent
/// alpha ~ Uniform(-gamma, 1 + gamma) mixes the parents,
///   child1_i = alpha * p1_i + (1 - alpha) * p2_i,
/// and child2 mirrors the blend. Children are NOT clamped; callers project
/// onto bounds. Throws std::invalid_argument on length mismatch.
std::pair<SolutionVector, SolutionVector> crossover(const SolutionVector& p1,
                                                    const SolutionVector& p2,
                                                    double gamma,
                                                    RngStream& rng);

/// Perturbs exactly `gene_count` distinct genes, chosen uniformly without
/// replacement (partial Fisher-Yates), each by Gaussian noise with standard
/// deviation sigma_scale * (upper_i - lower_i). The result is clamped to the
/// spec's bounds. Draw order: all index draws first, then one normal deviate
/// per chosen gene in selection order.
SolutionVector mutate_genes(const SolutionVector& v, int gene_count,
                            const ObjectiveSpec& spec, RngStream& rng,
                            double sigma_scale = 0.1);

/// Gaussian mutation at rate mu: perturbs ceil(mu * n) genes via
/// mutate_genes. mu = 0 is the identity and consumes no draws.
SolutionVector mutate(const SolutionVector& v, double mu,
                      const ObjectiveSpec& spec, RngStream& rng,
                      double sigma_scale = 0.1);

}  // namespace lpbsa
