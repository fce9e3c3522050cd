#include "lpbsa/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lpbsa {

std::vector<double> selection_probabilities(const std::vector<double>& costs,
                                            double beta) {
  if (costs.empty()) {
    throw std::invalid_argument("selection_probabilities: empty cost list");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument(
        "selection_probabilities: beta must be finite and > 0");
  }
  for (double c : costs) {
    if (!std::isfinite(c)) {
      throw std::invalid_argument(
          "selection_probabilities: non-finite cost");
    }
  }

  std::vector<double> scaled = costs;
  double worst = *std::max_element(scaled.begin(), scaled.end());
  if (worst <= 0.0) {
    const double lowest = *std::min_element(scaled.begin(), scaled.end());
    const double shift = 1.0 + std::abs(lowest);
    for (double& c : scaled) {
      c += shift;
    }
    worst = *std::max_element(scaled.begin(), scaled.end());
  }

  std::vector<double> exponents(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    exponents[i] = -beta * scaled[i] / worst;
  }
  // Guard against overflow when costs span many orders of magnitude with a
  // tiny positive worst: shifting every exponent by the maximum leaves the
  // normalized result unchanged. The common case takes the plain formula.
  const double peak = *std::max_element(exponents.begin(), exponents.end());
  const double offset = peak > 700.0 ? peak : 0.0;

  std::vector<double> weights(scaled.size());
  double total = 0.0;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    weights[i] = std::exp(exponents[i] - offset);
    total += weights[i];
  }
  for (double& w : weights) {
    w /= total;
  }
  return weights;
}

std::size_t roulette_select(const std::vector<double>& probabilities,
                            RngStream& rng) {
  if (probabilities.empty()) {
    throw std::invalid_argument("roulette_select: empty probability list");
  }
  const double total =
      std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "roulette_select: probabilities must sum to 1");
  }
  const double u = rng.uniform01();
  double acc = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    acc += probabilities[i];
    if (u < acc) {
      return i;
    }
  }
  return probabilities.size() - 1;
}

PopulationPartition divide_population(const std::vector<Individual>& pop,
                                      double dp) {
  if (pop.empty()) {
    throw std::invalid_argument("divide_population: empty population");
  }
  if (!(dp > 0.0 && dp < 1.0)) {
    throw std::invalid_argument("divide_population: dp must lie in (0, 1)");
  }
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (pop[i - 1].cost > pop[i].cost) {
      throw std::invalid_argument(
          "divide_population: population must be sorted ascending by cost");
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(pop.size());
  const auto k = static_cast<std::ptrdiff_t>(
      std::floor(dp * static_cast<double>(n)));
  const std::ptrdiff_t split = (k + 1) / 2;  // ceil(k / 2)

  PopulationPartition partition;
  partition.perfect.assign(pop.begin(), pop.begin() + split);
  partition.good.assign(pop.begin() + split, pop.begin() + k);
  partition.worst.assign(pop.begin() + k, pop.end());
  return partition;
}

namespace {

std::size_t roulette_over_pool(const std::vector<double>& probabilities,
                               std::size_t pool_begin, std::size_t pool_end,
                               RngStream& rng) {
  std::vector<double> restricted(probabilities.begin() + pool_begin,
                                 probabilities.begin() + pool_end);
  const double total =
      std::accumulate(restricted.begin(), restricted.end(), 0.0);
  for (double& p : restricted) {
    p /= total;
  }
  return pool_begin + roulette_select(restricted, rng);
}

}  // namespace

std::pair<Individual, Individual> select_parents(
    const PopulationPartition& partition,
    const std::vector<double>& probabilities, RngStream& rng,
    bool both_from_elite) {
  std::vector<Individual> pop;
  pop.reserve(partition.perfect.size() + partition.good.size() +
              partition.worst.size());
  pop.insert(pop.end(), partition.perfect.begin(), partition.perfect.end());
  pop.insert(pop.end(), partition.good.begin(), partition.good.end());
  pop.insert(pop.end(), partition.worst.begin(), partition.worst.end());
  if (pop.empty()) {
    throw std::invalid_argument("select_parents: empty partition");
  }
  if (probabilities.size() != pop.size()) {
    throw std::invalid_argument(
        "select_parents: probabilities must cover the full population");
  }

  const std::size_t elite = partition.perfect.size() + partition.good.size();
  const std::size_t pool_end = elite > 0 ? elite : pop.size();
  const std::size_t first = roulette_over_pool(probabilities, 0, pool_end, rng);
  if (pop.size() == 1) {
    return {pop[first], pop[first]};
  }

  const std::size_t second_end = both_from_elite ? pool_end : pop.size();
  if (first >= second_end || second_end == 1) {
    // Excluding the first parent leaves the pool intact (or forces the only
    // remaining member).
    const std::size_t second =
        roulette_over_pool(probabilities, 0, second_end, rng);
    return {pop[first], pop[second]};
  }
  std::vector<double> masked(probabilities.begin(),
                             probabilities.begin() + second_end);
  masked[first] = 0.0;
  const double total = std::accumulate(masked.begin(), masked.end(), 0.0);
  for (double& p : masked) {
    p /= total;
  }
  const std::size_t second = roulette_select(masked, rng);
  return {pop[first], pop[second]};
}

std::pair<SolutionVector, SolutionVector> crossover(const SolutionVector& p1,
                                                    const SolutionVector& p2,
                                                    double gamma,
                                                    RngStream& rng) {
  if (p1.size() != p2.size()) {
    throw std::invalid_argument("crossover: parent length mismatch");
  }
  SolutionVector c1(p1.size());
  SolutionVector c2(p1.size());
  for (Eigen::Index i = 0; i < p1.size(); ++i) {
    const double alpha = rng.uniform(-gamma, 1.0 + gamma);
    c1[i] = alpha * p1[i] + (1.0 - alpha) * p2[i];
    c2[i] = alpha * p2[i] + (1.0 - alpha) * p1[i];
  }
  return {std::move(c1), std::move(c2)};
}

SolutionVector mutate_genes(const SolutionVector& v, int gene_count,
                            const ObjectiveSpec& spec, RngStream& rng,
                            double sigma_scale) {
  if (v.size() != spec.dimension) {
    throw std::invalid_argument(
        "mutate_genes: vector length must equal spec dimension");
  }
  const int n = spec.dimension;
  const int count = std::clamp(gene_count, 0, n);

  // Partial Fisher-Yates: the first `count` slots end up holding a uniform
  // sample of distinct gene indices.
  std::vector<int> indices(n);
  std::iota(indices.begin(), indices.end(), 0);
  for (int i = 0; i < count; ++i) {
    const auto j =
        i + static_cast<int>(rng.index(static_cast<std::size_t>(n - i)));
    std::swap(indices[i], indices[j]);
  }

  SolutionVector out = v;
  for (int t = 0; t < count; ++t) {
    const int g = indices[t];
    const double sigma =
        sigma_scale * (spec.upper_bounds[g] - spec.lower_bounds[g]);
    out[g] = v[g] + sigma * rng.normal01();
  }
  return clamp_to_bounds(out, spec);
}

SolutionVector mutate(const SolutionVector& v, double mu,
                      const ObjectiveSpec& spec, RngStream& rng,
                      double sigma_scale) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("mutate: mu must lie in [0, 1]");
  }
  const int count = static_cast<int>(
      std::ceil(mu * static_cast<double>(spec.dimension)));
  if (count == 0) {
    return v;
  }
  return mutate_genes(v, count, spec, rng, sigma_scale);
}

}  // namespace lpbsa
