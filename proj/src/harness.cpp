#include "lpbsa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

#include "lpbsa/algorithms.hpp"

namespace lpbsa {

namespace {

std::string fmt9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Round to 9 significant digits so JSON numbers match the CSV precision.
double round9(double v) { return std::strtod(fmt9(v).c_str(), nullptr); }

std::string iso8601_utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    return "";
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw PlanError("invalid numeric value for '" + key + "': '" + value +
                    "'");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw PlanError("invalid integer value for '" + key + "': '" + value +
                    "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) {
      throw std::invalid_argument(value);
    }
    return v;
  } catch (const std::exception&) {
    throw PlanError("invalid integer value for '" + key + "': '" + value +
                    "'");
  }
}

bool known_algorithm(const std::string& name) {
  return name == "LPB" || name == "LPBSA" || name == "SA";
}

AlgorithmConfig default_config_for(const std::string& algorithm) {
  return algorithm == "LPB" ? lpb_defaults() : lpbsa_defaults();
}

void assign_config_key(AlgorithmConfig& config, const std::string& section,
                       const std::string& key, const std::string& value) {
  if (key == "max_iterations") {
    config.max_iterations = parse_int(key, value);
  } else if (key == "population_size") {
    config.population_size = parse_int(key, value);
  } else if (key == "pc") {
    config.pc = parse_double(key, value);
  } else if (key == "pm") {
    config.pm = parse_double(key, value);
  } else if (key == "gamma") {
    config.gamma = parse_double(key, value);
  } else if (key == "mu") {
    config.mu = parse_double(key, value);
  } else if (key == "dp") {
    config.dp = parse_double(key, value);
  } else if (key == "selection_beta") {
    config.selection_beta = parse_double(key, value);
  } else if (key == "cooling_rate") {
    config.cooling_rate = parse_double(key, value);
  } else if (key == "initial_temperature") {
    config.initial_temperature = parse_double(key, value);
  } else {
    throw PlanError("unknown key '" + key + "' in section [" + section + "]");
  }
}

void validate_plan(const ExperimentPlan& plan) {
  if (plan.functions.empty()) {
    throw PlanError("plan lists no 'functions'");
  }
  if (plan.algorithms.empty()) {
    throw PlanError("plan lists no 'algorithms'");
  }
  for (const std::string& algorithm : plan.algorithms) {
    if (!known_algorithm(algorithm)) {
      throw PlanError("unknown algorithm '" + algorithm +
                      "' in 'algorithms' (expected LPB, LPBSA, or SA)");
    }
  }
  for (std::size_t i = 0; i < plan.algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < plan.algorithms.size(); ++j) {
      if (plan.algorithms[i] == plan.algorithms[j]) {
        throw PlanError("duplicate algorithm '" + plan.algorithms[i] +
                        "' in 'algorithms'");
      }
    }
  }
  for (std::size_t i = 0; i < plan.functions.size(); ++i) {
    for (std::size_t j = i + 1; j < plan.functions.size(); ++j) {
      if (plan.functions[i] == plan.functions[j]) {
        throw PlanError("duplicate function '" + plan.functions[i] +
                        "' in 'functions'");
      }
    }
  }
  if (plan.runs < 1) {
    throw PlanError("'runs' must be at least 1");
  }
  if (std::find(plan.algorithms.begin(), plan.algorithms.end(),
                plan.baseline) == plan.algorithms.end()) {
    throw PlanError("'baseline' algorithm '" + plan.baseline +
                    "' is not in 'algorithms'");
  }
  for (const auto& [algorithm, config] : plan.configs) {
    try {
      validate_config(config);
    } catch (const std::invalid_argument& e) {
      throw PlanError("invalid configuration for [" + algorithm +
                      "]: " + e.what());
    }
  }
}

}  // namespace

ExperimentPlan parse_plan(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) {
    throw PlanError("cannot open plan file " + file.string());
  }

  ExperimentPlan plan;
  std::string section;  // empty while in the global scope
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    if (text.front() == '[') {
      if (text.back() != ']') {
        throw PlanError("malformed section header on line " +
                        std::to_string(line_no) + ": '" + text + "'");
      }
      section = trim(text.substr(1, text.size() - 2));
      if (!known_algorithm(section)) {
        throw PlanError("unknown algorithm section [" + section +
                        "] (expected LPB, LPBSA, or SA)");
      }
      if (plan.configs.count(section) == 0) {
        plan.configs.emplace(section, default_config_for(section));
      }
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw PlanError("unparseable line " + std::to_string(line_no) + ": '" +
                      text + "' (expected key = value)");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key.empty()) {
      throw PlanError("missing key on line " + std::to_string(line_no));
    }

    if (!section.empty()) {
      assign_config_key(plan.configs.at(section), section, key, value);
      continue;
    }
    if (key == "functions") {
      plan.functions = split_list(value);
    } else if (key == "algorithms") {
      plan.algorithms = split_list(value);
    } else if (key == "runs") {
      plan.runs = parse_int(key, value);
    } else if (key == "base_seed") {
      plan.base_seed = parse_u64(key, value);
    } else if (key == "baseline") {
      plan.baseline = value;
    } else if (key == "output_dir") {
      plan.output_dir = value;
    } else {
      throw PlanError("unknown key '" + key + "'");
    }
  }

  if (plan.baseline.empty() && !plan.algorithms.empty()) {
    plan.baseline = plan.algorithms.front();
  }
  for (const std::string& algorithm : plan.algorithms) {
    if (known_algorithm(algorithm) && plan.configs.count(algorithm) == 0) {
      plan.configs.emplace(algorithm, default_config_for(algorithm));
    }
  }
  validate_plan(plan);
  return plan;
}

std::filesystem::path resolve_output_dir(const ExperimentPlan& plan) {
  if (!plan.output_dir.empty()) {
    return plan.output_dir;
  }
  const char* env = std::getenv("OPT_OUTPUT_DIR");
  if (env != nullptr && *env != '\0') {
    return env;
  }
  return ".";
}

namespace {

struct Task {
  std::size_t function_index;
  std::size_t algorithm_index;
  int replicate;
};

}  // namespace

ExperimentReport execute(const ExperimentPlan& plan,
                         const BenchmarkCatalog& catalog, int jobs) {
  if (jobs < 1) {
    throw std::invalid_argument("jobs must be at least 1");
  }
  ExperimentPlan effective = plan;
  if (effective.baseline.empty() && !effective.algorithms.empty()) {
    effective.baseline = effective.algorithms.front();
  }
  for (const std::string& algorithm : effective.algorithms) {
    if (known_algorithm(algorithm) &&
        effective.configs.count(algorithm) == 0) {
      effective.configs.emplace(algorithm, default_config_for(algorithm));
    }
  }
  validate_plan(effective);

  // Fail fast: resolve every function id before any run starts.
  std::vector<const ObjectiveSpec*> specs;
  specs.reserve(effective.functions.size());
  for (const std::string& id : effective.functions) {
    specs.push_back(&catalog.at(id));
  }

  ExperimentReport report;
  report.plan = effective;
  report.tool_version = kVersion;
  report.started_at = iso8601_utc_now();

  std::vector<Task> tasks;
  for (std::size_t f = 0; f < effective.functions.size(); ++f) {
    for (std::size_t a = 0; a < effective.algorithms.size(); ++a) {
      for (int r = 0; r < effective.runs; ++r) {
        tasks.push_back(Task{f, a, r});
      }
    }
  }

  std::vector<RunTrace> traces(tasks.size());
  std::vector<std::exception_ptr> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) {
        return;
      }
      const Task& task = tasks[i];
      try {
        const std::string& algorithm =
            effective.algorithms[task.algorithm_index];
        traces[i] = run_single(
            *specs[task.function_index], effective.configs.at(algorithm),
            algorithm,
            effective.base_seed + static_cast<std::uint64_t>(task.replicate));
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };

  const int thread_count =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
  if (thread_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) {
      pool.emplace_back(worker);
    }
    for (std::thread& t : pool) {
      t.join();
    }
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!failures[i]) {
      continue;
    }
    const Task& task = tasks[i];
    const std::string where = effective.functions[task.function_index] +
                              " (algorithm " +
                              effective.algorithms[task.algorithm_index] +
                              ", replicate " +
                              std::to_string(task.replicate) + ")";
    try {
      std::rethrow_exception(failures[i]);
    } catch (const NonFiniteCostError& e) {
      // Re-raise with the run cell attached to the objective name.
      throw NonFiniteCostError(where, e.iteration(), e.position());
    } catch (const std::exception& e) {
      throw std::runtime_error("run of " + where + " failed: " + e.what());
    }
  }

  const std::filesystem::path out_dir = resolve_output_dir(effective);
  const std::filesystem::path conv_dir = out_dir / "convergence";
  std::filesystem::create_directories(conv_dir);
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task& task = tasks[i];
    const std::string name = effective.functions[task.function_index] + "_" +
                             effective.algorithms[task.algorithm_index] +
                             "_rep" + std::to_string(task.replicate) + ".txt";
    emit_convergence(traces[i], conv_dir / name);
  }

  std::map<std::string, std::map<std::string, std::vector<double>>> finals;
  std::size_t index = 0;
  for (std::size_t f = 0; f < effective.functions.size(); ++f) {
    for (std::size_t a = 0; a < effective.algorithms.size(); ++a) {
      std::vector<double> cell;
      cell.reserve(static_cast<std::size_t>(effective.runs));
      for (int r = 0; r < effective.runs; ++r) {
        cell.push_back(traces[index++].best_individual.cost);
      }
      CellSummary summary;
      summary.function = effective.functions[f];
      summary.algorithm = effective.algorithms[a];
      summary.summary = summarize(cell);
      report.summaries.push_back(std::move(summary));
      finals[effective.functions[f]][effective.algorithms[a]] =
          std::move(cell);
    }
  }

  const std::vector<SignificanceRow> rows =
      significance_table(finals, effective.baseline);
  std::map<std::pair<std::string, std::string>, std::optional<double>> lookup;
  for (const SignificanceRow& row : rows) {
    lookup[{row.function, row.algorithm}] = row.p_value;
  }
  for (const std::string& function : effective.functions) {
    for (const std::string& algorithm : effective.algorithms) {
      SignificanceRow row;
      row.function = function;
      row.algorithm = algorithm;
      row.p_value = lookup.at({function, algorithm});
      report.p_values.push_back(std::move(row));
    }
  }

  report.finished_at = iso8601_utc_now();
  emit_report(report, out_dir);
  return report;
}

void emit_convergence(const RunTrace& trace,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write convergence file " +
                             path.string());
  }
  out << "# iteration best_cost\n";
  for (std::size_t i = 0; i < trace.best_costs.size(); ++i) {
    out << (i + 1) << ' ' << fmt9(trace.best_costs[i]) << '\n';
  }
  if (!out) {
    throw std::runtime_error("failed writing convergence file " +
                             path.string());
  }
}

void emit_report(const ExperimentReport& report,
                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  {
    std::ofstream csv(dir / "summary.csv");
    if (!csv) {
      throw std::runtime_error("cannot write " +
                               (dir / "summary.csv").string());
    }
    csv << "function,algorithm,mean,std,best,worst,runs\n";
    for (const CellSummary& cell : report.summaries) {
      csv << cell.function << ',' << cell.algorithm << ','
          << fmt9(cell.summary.mean) << ',' << fmt9(cell.summary.std) << ','
          << fmt9(cell.summary.best) << ',' << fmt9(cell.summary.worst) << ','
          << cell.summary.n << '\n';
    }
  }

  {
    std::ofstream csv(dir / "pvalues.csv");
    if (!csv) {
      throw std::runtime_error("cannot write " +
                               (dir / "pvalues.csv").string());
    }
    csv << "function,algorithm,p_value_vs_baseline\n";
    for (const SignificanceRow& row : report.p_values) {
      csv << row.function << ',' << row.algorithm << ',';
      if (row.p_value) {
        csv << fmt9(*row.p_value);
      }
      csv << '\n';
    }
  }

  nlohmann::ordered_json doc;
  doc["tool_version"] = report.tool_version;
  doc["started_at"] = report.started_at;
  doc["finished_at"] = report.finished_at;

  nlohmann::ordered_json plan;
  plan["functions"] = report.plan.functions;
  plan["algorithms"] = report.plan.algorithms;
  plan["runs"] = report.plan.runs;
  plan["base_seed"] = report.plan.base_seed;
  plan["baseline"] = report.plan.baseline;
  plan["output_dir"] = resolve_output_dir(report.plan).string();
  nlohmann::ordered_json configs = nlohmann::ordered_json::object();
  for (const auto& [algorithm, config] : report.plan.configs) {
    nlohmann::ordered_json c;
    c["max_iterations"] = config.max_iterations;
    c["population_size"] = config.population_size;
    c["pc"] = config.pc;
    c["pm"] = config.pm;
    c["gamma"] = config.gamma;
    c["mu"] = config.mu;
    c["dp"] = config.dp;
    c["selection_beta"] = config.selection_beta;
    c["cooling_rate"] = config.cooling_rate;
    if (std::isfinite(config.initial_temperature)) {
      c["initial_temperature"] = config.initial_temperature;
    } else {
      c["initial_temperature"] = "inf";
    }
    configs[algorithm] = std::move(c);
  }
  plan["configs"] = std::move(configs);
  doc["plan"] = std::move(plan);

  nlohmann::ordered_json summaries = nlohmann::ordered_json::array();
  for (const CellSummary& cell : report.summaries) {
    nlohmann::ordered_json row;
    row["function"] = cell.function;
    row["algorithm"] = cell.algorithm;
    row["mean"] = round9(cell.summary.mean);
    row["std"] = round9(cell.summary.std);
    row["best"] = round9(cell.summary.best);
    row["worst"] = round9(cell.summary.worst);
    row["runs"] = cell.summary.n;
    summaries.push_back(std::move(row));
  }
  doc["summaries"] = std::move(summaries);

  nlohmann::ordered_json pvalues = nlohmann::ordered_json::array();
  for (const SignificanceRow& row : report.p_values) {
    nlohmann::ordered_json entry;
    entry["function"] = row.function;
    entry["algorithm"] = row.algorithm;
    if (row.p_value) {
      entry["p_value_vs_baseline"] = round9(*row.p_value);
    } else {
      entry["p_value_vs_baseline"] = nullptr;
    }
    pvalues.push_back(std::move(entry));
  }
  doc["p_values"] = std::move(pvalues);

  std::ofstream json_out(dir / "report.json");
  if (!json_out) {
    throw std::runtime_error("cannot write " + (dir / "report.json").string());
  }
  json_out << doc.dump(2) << '\n';
}

}  // namespace lpbsa
