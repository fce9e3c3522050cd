#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "generation_oracle.hpp"
#include "lpbsa/algorithms.hpp"
#include "lpbsa/benchmarks.hpp"
#include "test_support.hpp"

using lpbsa::AlgorithmConfig;
using lpbsa::Individual;
using lpbsa::Mt64Stream;
using lpbsa::ObjectiveSpec;
using lpbsa::RunTrace;
using lpbsa::SolutionVector;
using oracle::expected_mutant_pool;
using oracle::expected_pair_pool;
using oracle::Generation;
using oracle::recompute_one_generation;

namespace {

ObjectiveSpec sphere(int dim, double lo = -10.0, double hi = 10.0) {
  return lpbsa::make_uniform_spec(
      "sphere", dim, lo, hi,
      [](const SolutionVector& x, lpbsa::RngStream&) {
        return x.squaredNorm();
      });
}

void check_one_generation_oracle(bool annealed, std::uint64_t seed,
                                 AlgorithmConfig cfg) {
  const ObjectiveSpec spec = sphere(3);
  cfg.max_iterations = 1;

  std::vector<Individual> captured;
  Mt64Stream rng(seed);
  const RunTrace trace =
      annealed
          ? lpbsa::lpbsa_run(spec, cfg, rng,
                             [&](int, const std::vector<Individual>& pop) {
                               captured = pop;
                             })
          : lpbsa::lpb_run(spec, cfg, rng,
                           [&](int, const std::vector<Individual>& pop) {
                             captured = pop;
                           });

  Mt64Stream replay(seed);
  const Generation want =
      recompute_one_generation(spec, cfg, annealed, replay);

  REQUIRE(captured.size() == want.positions.size());
  for (std::size_t i = 0; i < captured.size(); ++i) {
    CAPTURE(i);
    CHECK(captured[i].cost == want.costs[i]);
    CHECK(captured[i].position == want.positions[i]);
  }
  CHECK(trace.best_costs.size() == 1);
  CHECK(trace.best_costs[0] == want.costs[0]);
  CHECK(trace.best_individual.position == want.positions[0]);
}

}  // namespace

TEST_CASE("one baseline generation matches the straight-line recompute") {
  AlgorithmConfig cfg = lpbsa::lpb_defaults();
  cfg.population_size = 6;
  cfg.mu = 0.34;  // two genes of three mutate
  check_one_generation_oracle(false, 424242, cfg);
  check_one_generation_oracle(false, 1, cfg);
  check_one_generation_oracle(false, 987654321, cfg);
}

TEST_CASE("one annealed generation matches the straight-line recompute") {
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.population_size = 6;
  cfg.mu = 0.34;
  check_one_generation_oracle(true, 777, cfg);
  check_one_generation_oracle(true, 31337, cfg);

  SUBCASE("tiny elite fraction falls back to the whole population") {
    cfg.dp = 0.15;  // floor(0.15 * 6) = 0: no elite tier
    check_one_generation_oracle(true, 2024, cfg);
  }
  SUBCASE("near-zero temperature rejects every worsening child") {
    cfg.initial_temperature = 1e-300;
    check_one_generation_oracle(true, 5150, cfg);
  }
  SUBCASE("population of one degenerates gracefully") {
    cfg.population_size = 1;  // parents always coincide
    cfg.dp = 0.5;
    check_one_generation_oracle(true, 99, cfg);
  }
}

TEST_CASE("evaluation budget is exact across configurations") {
  const ObjectiveSpec spec = sphere(5);
  struct Combo {
    int n_pop;
    double pc;
    double pm;
  };
  const Combo combos[] = {
      {30, 0.8, 0.8}, {30, 0.6, 0.3}, {10, 0.8, 0.8},
      {12, 0.85, 0.85}, {7, 0.5, 0.5}, {1, 0.8, 0.8}};
  for (const Combo& combo : combos) {
    AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
    cfg.population_size = combo.n_pop;
    cfg.pc = combo.pc;
    cfg.pm = combo.pm;
    cfg.max_iterations = 7;
    CAPTURE(combo.n_pop);
    CAPTURE(combo.pc);
    CAPTURE(combo.pm);

    long calls = 0;
    ObjectiveSpec counting = spec;
    counting.evaluate = [&calls](const SolutionVector& x, lpbsa::RngStream&) {
      ++calls;
      return x.squaredNorm();
    };

    Mt64Stream rng(12);
    const RunTrace trace = lpbsa::lpbsa_run(counting, cfg, rng);
    const long want =
        combo.n_pop +
        7L * (expected_pair_pool(cfg) + expected_mutant_pool(cfg));
    CHECK(trace.evaluations == want);
    CHECK(calls == want);

    Mt64Stream rng2(12);
    calls = 0;
    const RunTrace baseline = lpbsa::lpb_run(counting, cfg, rng2);
    CHECK(baseline.evaluations == want);
    CHECK(calls == want);
  }
}

TEST_CASE("rejected candidates are evaluated but not pooled") {
  // Greedy temperature: every worsening candidate is evaluated yet dropped.
  const ObjectiveSpec spec = sphere(4);
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.population_size = 10;
  cfg.max_iterations = 20;
  cfg.initial_temperature = 1e-300;
  Mt64Stream rng(88);
  const RunTrace trace = lpbsa::lpbsa_run(spec, cfg, rng);
  CHECK(trace.evaluations ==
        10 + 20 * (expected_pair_pool(cfg) + expected_mutant_pool(cfg)));
  CHECK(trace.metropolis_tested ==
        20 * (expected_pair_pool(cfg) + expected_mutant_pool(cfg)));
  CHECK(trace.metropolis_accepted < trace.metropolis_tested);
}

TEST_CASE("the baseline driver never consults the acceptance rule") {
  const ObjectiveSpec spec = sphere(4);
  AlgorithmConfig cfg = lpbsa::lpb_defaults();
  cfg.max_iterations = 10;
  Mt64Stream rng(4);
  const RunTrace trace = lpbsa::lpb_run(spec, cfg, rng);
  CHECK(trace.metropolis_tested == 0);
  CHECK(trace.metropolis_accepted == 0);
  CHECK(trace.algorithm == "LPB");
}

TEST_CASE("infinite temperature accepts every offspring") {
  const ObjectiveSpec spec = sphere(4);
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.population_size = 10;
  cfg.max_iterations = 15;
  cfg.initial_temperature = std::numeric_limits<double>::infinity();
  Mt64Stream rng(5);
  const RunTrace trace = lpbsa::lpbsa_run(spec, cfg, rng);
  CHECK(trace.metropolis_tested ==
        15 * (expected_pair_pool(cfg) + expected_mutant_pool(cfg)));
  CHECK(trace.metropolis_accepted == trace.metropolis_tested);
}

TEST_CASE("best-cost series are monotone and population size is invariant") {
  const ObjectiveSpec spec = sphere(6);
  for (const char* algorithm : {"LPB", "LPBSA"}) {
    AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
    cfg.max_iterations = 60;
    cfg.population_size = 14;
    CAPTURE(algorithm);

    std::vector<int> sizes;
    std::vector<int> iterations;
    auto observer = [&](int it, const std::vector<Individual>& pop) {
      iterations.push_back(it);
      sizes.push_back(static_cast<int>(pop.size()));
      for (std::size_t i = 1; i < pop.size(); ++i) {
        CHECK(pop[i - 1].cost <= pop[i].cost);
      }
    };
    Mt64Stream rng(2718);
    const RunTrace trace =
        std::string(algorithm) == "LPB"
            ? lpbsa::lpb_run(spec, cfg, rng, observer)
            : lpbsa::lpbsa_run(spec, cfg, rng, observer);

    REQUIRE(trace.best_costs.size() == 60);
    for (std::size_t i = 1; i < trace.best_costs.size(); ++i) {
      CHECK(trace.best_costs[i] <= trace.best_costs[i - 1]);
    }
    REQUIRE(iterations.size() == 60);
    for (int i = 0; i < 60; ++i) {
      CHECK(iterations[static_cast<std::size_t>(i)] == i + 1);
      CHECK(sizes[static_cast<std::size_t>(i)] == 14);
    }
    CHECK(trace.best_individual.cost == trace.best_costs.back());
  }
}

TEST_CASE("zero iterations return the best of the initial sample") {
  const ObjectiveSpec spec = sphere(3);
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.max_iterations = 0;
  cfg.population_size = 8;
  Mt64Stream rng(9);
  const RunTrace trace = lpbsa::lpbsa_run(spec, cfg, rng);
  CHECK(trace.best_costs.empty());
  CHECK(trace.evaluations == 8);

  // The reported best is the cheapest of the 8 uniform samples.
  Mt64Stream replay(9);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    SolutionVector x(3);
    for (int g = 0; g < 3; ++g) {
      x[g] = replay.uniform(-10.0, 10.0);
    }
    best = std::min(best, x.squaredNorm());
  }
  CHECK(trace.best_individual.cost == best);
}

TEST_CASE("run_single dispatches by algorithm name and pins the seed") {
  const ObjectiveSpec spec = sphere(3);
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.max_iterations = 5;

  const RunTrace a = lpbsa::run_single(spec, cfg, "LPB", 42);
  CHECK(a.algorithm == "LPB");
  CHECK(a.config_snapshot.seed == 42);

  const RunTrace b = lpbsa::run_single(spec, cfg, "LPBSA", 42);
  CHECK(b.algorithm == "LPBSA");

  const RunTrace c = lpbsa::run_single(spec, cfg, "SA", 42);
  CHECK(c.algorithm == "SA");
  CHECK(c.evaluations == 6);  // 1 + MaxIt

  CHECK_THROWS_WITH_AS(
      static_cast<void>(lpbsa::run_single(spec, cfg, "GA", 42)),
      doctest::Contains("GA"), std::invalid_argument);
}

TEST_CASE("identical seeds reproduce identical runs") {
  const ObjectiveSpec spec = sphere(5);
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.max_iterations = 30;
  const RunTrace a = lpbsa::run_single(spec, cfg, "LPBSA", 1234);
  const RunTrace b = lpbsa::run_single(spec, cfg, "LPBSA", 1234);
  CHECK(a.best_costs == b.best_costs);
  CHECK(a.best_individual.position == b.best_individual.position);
  const RunTrace c = lpbsa::run_single(spec, cfg, "LPBSA", 1235);
  CHECK(a.best_costs != c.best_costs);
}

TEST_CASE("run_replicates seeds sequentially from the base seed") {
  const ObjectiveSpec spec = sphere(4);
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.max_iterations = 10;
  const std::vector<RunTrace> traces =
      lpbsa::run_replicates(spec, cfg, "LPBSA", 4, 100);
  REQUIRE(traces.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(traces[static_cast<std::size_t>(i)].config_snapshot.seed ==
          100 + static_cast<std::uint64_t>(i));
    const RunTrace again = lpbsa::run_single(
        spec, cfg, "LPBSA", 100 + static_cast<std::uint64_t>(i));
    CHECK(traces[static_cast<std::size_t>(i)].best_individual.cost ==
          again.best_individual.cost);
  }
  CHECK_THROWS_AS(
      static_cast<void>(lpbsa::run_replicates(spec, cfg, "LPBSA", 0, 1)),
      std::invalid_argument);
}

TEST_CASE("a non-finite objective aborts with context") {
  AlgorithmConfig cfg = lpbsa::lpbsa_defaults();
  cfg.population_size = 30;
  cfg.max_iterations = 3;

  SUBCASE("during the initial sampling") {
    int calls = 0;
    ObjectiveSpec bad = sphere(3);
    bad.name = "poisoned";
    bad.evaluate = [&calls](const SolutionVector& x, lpbsa::RngStream&) {
      ++calls;
      return calls == 5 ? std::nan("") : x.squaredNorm();
    };
    Mt64Stream rng(3);
    try {
      static_cast<void>(lpbsa::lpbsa_run(bad, cfg, rng));
      FAIL("expected NonFiniteCostError");
    } catch (const lpbsa::NonFiniteCostError& e) {
      CHECK(e.iteration() == 0);
      CHECK(std::string(e.what()).find("poisoned") != std::string::npos);
    }
  }
  SUBCASE("during a generation") {
    int calls = 0;
    ObjectiveSpec bad = sphere(3);
    bad.name = "poisoned";
    bad.evaluate = [&calls](const SolutionVector& x, lpbsa::RngStream&) {
      ++calls;
      return calls == 40 ? -std::numeric_limits<double>::infinity()
                         : x.squaredNorm();
    };
    Mt64Stream rng(3);
    try {
      static_cast<void>(lpbsa::lpb_run(bad, cfg, rng));
      FAIL("expected NonFiniteCostError");
    } catch (const lpbsa::NonFiniteCostError& e) {
      CHECK(e.iteration() == 1);
      CHECK(std::string(e.what()).find("iteration 1") != std::string::npos);
    }
  }
}
