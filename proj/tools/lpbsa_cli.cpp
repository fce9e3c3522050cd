// Command-line experiment runner.
//
//   lpbsa run <plan-file> [--jobs N] [--runs N] [--base-seed N] [--output-dir D]
//   lpbsa list-functions
//   lpbsa single --function ID --algorithm {LPB,LPBSA,SA} [--seed N]
//         [--param key=value ...]
//
// Global: --data-dir D points at CEC shift/rotation data files (<ID>.txt).
// Exit codes: 0 success, 1 validation error, 2 runtime abort.
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpbsa/algorithms.hpp"
#include "lpbsa/benchmarks.hpp"
#include "lpbsa/harness.hpp"

namespace {

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void apply_param(lpbsa::AlgorithmConfig& config, const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
  }
  const std::string key = kv.substr(0, eq);
  const std::string value = kv.substr(eq + 1);
  std::size_t pos = 0;
  double number = 0.0;
  try {
    number = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size()) {
    throw std::invalid_argument("invalid numeric value for --param '" + key +
                                "': '" + value + "'");
  }
  if (key == "max_iterations") {
    config.max_iterations = static_cast<int>(number);
  } else if (key == "population_size") {
    config.population_size = static_cast<int>(number);
  } else if (key == "pc") {
    config.pc = number;
  } else if (key == "pm") {
    config.pm = number;
  } else if (key == "gamma") {
    config.gamma = number;
  } else if (key == "mu") {
    config.mu = number;
  } else if (key == "dp") {
    config.dp = number;
  } else if (key == "selection_beta") {
    config.selection_beta = number;
  } else if (key == "cooling_rate") {
    config.cooling_rate = number;
  } else if (key == "initial_temperature") {
    config.initial_temperature = number;
  } else {
    throw std::invalid_argument("unknown --param key '" + key + "'");
  }
}

void print_catalog(const lpbsa::BenchmarkCatalog& catalog) {
  for (const std::string& id : catalog.ids()) {
    const lpbsa::ObjectiveSpec& spec = catalog.at(id);
    std::cout << id << " dim=" << spec.dimension << " bounds=["
              << fmt9(spec.lower_bounds.minCoeff()) << ", "
              << fmt9(spec.upper_bounds.maxCoeff()) << "]";
    if (spec.known_optimum) {
      std::cout << " optimum=" << fmt9(*spec.known_optimum);
    }
    std::cout << "\n";
  }
}

void print_single(const lpbsa::RunTrace& trace, const std::string& function,
                  std::uint64_t seed) {
  std::cout << "function: " << function << "\n";
  std::cout << "algorithm: " << trace.algorithm << "\n";
  std::cout << "seed: " << seed << "\n";
  std::cout << "iterations: " << trace.best_costs.size() << "\n";
  std::cout << "evaluations: " << trace.evaluations << "\n";
  if (trace.metropolis_tested > 0) {
    std::cout << "metropolis_accepted: " << trace.metropolis_accepted << "/"
              << trace.metropolis_tested << "\n";
  }
  std::cout << "best_cost: " << fmt9(trace.best_individual.cost) << "\n";
  std::cout << "best_position:";
  for (Eigen::Index i = 0; i < trace.best_individual.position.size(); ++i) {
    std::cout << ' ' << fmt9(trace.best_individual.position[i]);
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Benchmark runner for the LPB / LPBSA / SA optimizers"};
  app.require_subcommand(1);

  std::string data_dir;
  app.add_option("--data-dir", data_dir,
                 "Directory holding CEC shift/rotation files (<ID>.txt)");

  CLI::App* run_cmd = app.add_subcommand("run", "Execute a plan file");
  std::string plan_path;
  run_cmd->add_option("plan", plan_path, "Plan file path")->required();
  int jobs = 1;
  run_cmd->add_option("--jobs", jobs, "Worker threads for replicates");
  int runs_override = 0;
  run_cmd->add_option("--runs", runs_override,
                      "Override the plan's replicate count");
  std::uint64_t seed_override = 0;
  run_cmd->add_option("--base-seed", seed_override,
                      "Override the plan's base seed");
  std::string output_override;
  run_cmd->add_option("--output-dir", output_override,
                      "Override the plan's output directory");

  CLI::App* list_cmd =
      app.add_subcommand("list-functions", "List the benchmark catalog");

  CLI::App* single_cmd =
      app.add_subcommand("single", "One seeded run of one function");
  std::string function;
  single_cmd->add_option("--function", function, "Catalog identifier")
      ->required();
  std::string algorithm;
  single_cmd->add_option("--algorithm", algorithm, "LPB, LPBSA, or SA")
      ->required();
  std::uint64_t seed = 0;
  single_cmd->add_option("--seed", seed, "Run seed");
  std::vector<std::string> params;
  single_cmd->add_option("--param", params,
                         "Configuration override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    std::optional<std::filesystem::path> cec_dir;
    if (!data_dir.empty()) {
      cec_dir = data_dir;
    }
    const lpbsa::BenchmarkCatalog catalog = lpbsa::default_catalog(cec_dir);

    if (run_cmd->parsed()) {
      lpbsa::ExperimentPlan plan = lpbsa::parse_plan(plan_path);
      if (run_cmd->count("--runs") > 0) {
        plan.runs = runs_override;
      }
      if (run_cmd->count("--base-seed") > 0) {
        plan.base_seed = seed_override;
      }
      if (run_cmd->count("--output-dir") > 0) {
        plan.output_dir = output_override;
      }
      const lpbsa::ExperimentReport report =
          lpbsa::execute(plan, catalog, jobs);
      const std::filesystem::path out = lpbsa::resolve_output_dir(plan);
      std::cout << "wrote " << (out / "summary.csv").string() << ", "
                << (out / "pvalues.csv").string() << ", "
                << (out / "report.json").string() << " ("
                << report.summaries.size() << " cells x " << report.plan.runs
                << " runs)\n";
    } else if (list_cmd->parsed()) {
      print_catalog(catalog);
    } else if (single_cmd->parsed()) {
      lpbsa::AlgorithmConfig config =
          algorithm == "LPB" ? lpbsa::lpb_defaults() : lpbsa::lpbsa_defaults();
      for (const std::string& kv : params) {
        apply_param(config, kv);
      }
      const lpbsa::RunTrace trace =
          lpbsa::run_single(catalog.at(function), config, algorithm, seed);
      print_single(trace, function, seed);
    }
    return 0;
  } catch (const lpbsa::PlanError& e) {
    std::cerr << "plan error: " << e.what() << "\n";
    return 1;
  } catch (const lpbsa::DataFileError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lpbsa::NonFiniteCostError& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return 2;
  }
}
