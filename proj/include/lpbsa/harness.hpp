// Batch experiment runner: plan files, replicate execution across
// functions x algorithms (optionally multi-threaded), and CSV/JSON report
// emission with per-replicate convergence curves.
#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpbsa/benchmarks.hpp"
#include "lpbsa/core.hpp"
#include "lpbsa/stats.hpp"

namespace lpbsa {

/// Thrown on malformed plan files; the message names the offending field.
class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A batch experiment: which functions, which algorithms, how many seeded
/// replicates, and per-algorithm parameter overrides.
struct ExperimentPlan {
  std::vector<std::string> functions;
  std::vector<std::string> algorithms;  // subset of {LPB, LPBSA, SA}
  int runs = 30;
  std::uint64_t base_seed = 1;
  std::string baseline;  // defaults to the first listed algorithm
  std::filesystem::path output_dir;  // empty: $OPT_OUTPUT_DIR, else "."
  std::map<std::string, AlgorithmConfig> configs;  // keyed by algorithm
};

/// Per-cell aggregate in report order.
struct CellSummary {
  std::string function;
  std::string algorithm;
  SampleSummary summary;
};

struct ExperimentReport {
  ExperimentPlan plan;
  std::string tool_version;
  std::string started_at;   // ISO-8601 UTC
  std::string finished_at;  // ISO-8601 UTC
  std::vector<CellSummary> summaries;        // plan order
  std::vector<SignificanceRow> p_values;     // plan order, vs plan.baseline
};

/// Parses a flat key=value plan with one optional [ALGORITHM] section per
/// algorithm. Global keys: functions, algorithms (comma-separated lists),
/// runs, base_seed, baseline, output_dir. Section keys are the
/// AlgorithmConfig fields (max_iterations, population_size, pc, pm, gamma,
/// mu, dp, selection_beta, cooling_rate, initial_temperature); sections
/// start from the algorithm's defaults. '#' starts a comment. Unknown keys,
/// unknown sections, and out-of-range values raise PlanError naming the
/// offender.
ExperimentPlan parse_plan(const std::filesystem::path& file);

/// Resolves the plan's output directory: the plan value if non-empty, else
/// the OPT_OUTPUT_DIR environment variable, else the current directory.
std::filesystem::path resolve_output_dir(const ExperimentPlan& plan);

/// Runs every (function, algorithm, replicate) cell of the plan —
/// replicate r uses seed base_seed + r, identical across algorithms so
/// comparisons are seed-paired — then writes convergence files, summary.csv,
/// pvalues.csv, and report.json under the resolved output directory.
/// `jobs` > 1 distributes replicates over that many worker threads; results
/// are ordered by (function, algorithm, replicate) regardless of completion
/// order. Function ids are resolved against the catalog before any run
/// starts. A non-finite objective value aborts with NonFiniteCostError
/// carrying (function, algorithm, replicate) context.
ExperimentReport execute(const ExperimentPlan& plan,
                         const BenchmarkCatalog& catalog, int jobs = 1);

/// Writes a two-column per-iteration trace: header "# iteration best_cost",
/// then one "iteration best_cost" row per iteration, 1-based.
void emit_convergence(const RunTrace& trace,
                      const std::filesystem::path& path);

/// Writes summary.csv, pvalues.csv, and report.json into `dir`. Numbers are
/// serialized with 9 significant digits. CSV bodies carry no timestamps, so
/// identical plans yield byte-identical CSVs.
void emit_report(const ExperimentReport& report,
                 const std::filesystem::path& dir);

}  // namespace lpbsa
