// Descriptive statistics over replicate results and the two-sided Wilcoxon
// rank-sum test (exact enumeration for pooled sizes up to 20, tie-corrected
// normal approximation beyond).
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lpbsa {

struct SampleSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, n-1 denominator; n=1 -> 0
  int n = 0;
  double best = 0.0;
  double worst = 0.0;
};

/// Mean / sample std / extremes of a replicate batch.
/// Throws std::invalid_argument on an empty or non-finite input.
SampleSummary summarize(const std::vector<double>& final_costs);

/// Two-sided Wilcoxon rank-sum p-value in (0, 1]. Ties are handled with
/// mid-ranks. Dispatches to the exact enumeration when the pooled size is
/// at most 20 and to the normal approximation otherwise. Symmetric:
/// wilcoxon_rank_sum(a, b) == wilcoxon_rank_sum(b, a) exactly.
double wilcoxon_rank_sum(const std::vector<double>& a,
                         const std::vector<double>& b);

/// Exact enumeration over all C(|a|+|b|, |a|) rank assignments, collapsed to
/// the mid-rank statistic. Counts are exact for pooled sizes well past the
/// dispatcher's threshold of 20.
double wilcoxon_rank_sum_exact(const std::vector<double>& a,
                               const std::vector<double>& b);

/// Normal approximation with tie-corrected variance and a 0.5 continuity
/// correction toward the mean.
double wilcoxon_rank_sum_normal(const std::vector<double>& a,
                                const std::vector<double>& b);

struct SignificanceRow {
  std::string function;
  std::string algorithm;
  std::optional<double> p_value;  // empty when the sample is absent
};

/// One row per (function, algorithm) pair with the p-value of that
/// algorithm's sample against the baseline algorithm's sample on the same
/// function. The baseline must be present for every function (otherwise
/// std::invalid_argument naming the function); other absent samples yield a
/// row with an empty p-value. Rows are ordered by function and then by
/// algorithm over the union of algorithm names.
std::vector<SignificanceRow> significance_table(
    const std::map<std::string, std::map<std::string, std::vector<double>>>&
        results,
    const std::string& baseline);

}  // namespace lpbsa
