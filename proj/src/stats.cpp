#include "lpbsa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lpbsa {

namespace {

void require_finite(const std::vector<double>& v, const char* label) {
  for (const double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(label) +
                                  " contains a non-finite value");
    }
  }
}

// Doubled mid-ranks of the pooled sorted sample: a run of equal values
// occupying sorted positions [i, j) (0-based) all receive 2 * mid-rank =
// (i + 1) + j, which keeps every rank an exact integer even with ties.
std::vector<long> doubled_midranks(const std::vector<double>& pooled_sorted) {
  const std::size_t n = pooled_sorted.size();
  std::vector<long> r2(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j < n && pooled_sorted[j] == pooled_sorted[i]) {
      ++j;
    }
    const long mid2 = static_cast<long>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      r2[t] = mid2;
    }
    i = j;
  }
  return r2;
}

// Doubled rank-sum of sample `a` within the pooled sample.
long doubled_rank_sum(const std::vector<double>& a,
                      const std::vector<double>& pooled_sorted) {
  long sum = 0;
  for (const double v : a) {
    const auto lo = std::lower_bound(pooled_sorted.begin(),
                                     pooled_sorted.end(), v) -
                    pooled_sorted.begin();
    const auto hi = std::upper_bound(pooled_sorted.begin(),
                                     pooled_sorted.end(), v) -
                    pooled_sorted.begin();
    sum += static_cast<long>(lo + 1 + hi);
  }
  return sum;
}

void require_samples(const std::vector<double>& a,
                     const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument(
        "wilcoxon_rank_sum requires two non-empty samples");
  }
  require_finite(a, "sample a");
  require_finite(b, "sample b");
}

}  // namespace

SampleSummary summarize(const std::vector<double>& final_costs) {
  if (final_costs.empty()) {
    throw std::invalid_argument("summarize requires a non-empty sample");
  }
  require_finite(final_costs, "summarize input");
  SampleSummary s;
  s.n = static_cast<int>(final_costs.size());
  double total = 0.0;
  s.best = final_costs.front();
  s.worst = final_costs.front();
  for (const double v : final_costs) {
    total += v;
    s.best = std::min(s.best, v);
    s.worst = std::max(s.worst, v);
  }
  s.mean = total / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (const double v : final_costs) {
      const double d = v - s.mean;
      ss += d * d;
    }
    s.std = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

double wilcoxon_rank_sum_exact(const std::vector<double>& a,
                               const std::vector<double>& b) {
  require_samples(a, b);
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());

  const std::vector<long> r2 = doubled_midranks(pooled);
  const long obs = doubled_rank_sum(a, pooled);
  const int na = static_cast<int>(a.size());

  long max_sum = 0;
  for (const long r : r2) {
    max_sum += r;
  }

  // ways[k][s]: number of na-or-fewer-element subsets of the doubled ranks
  // with k elements summing to s. Counts stay far below 2^53 for the sample
  // sizes the dispatcher routes here, so doubles hold them exactly.
  std::vector<std::vector<double>> ways(
      static_cast<std::size_t>(na) + 1,
      std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
  ways[0][0] = 1.0;
  for (const long r : r2) {
    for (int k = na; k >= 1; --k) {
      for (long s = max_sum; s >= r; --s) {
        ways[k][s] += ways[k - 1][s - r];
      }
    }
  }

  double count_le = 0.0;
  double count_ge = 0.0;
  double total = 0.0;
  for (long s = 0; s <= max_sum; ++s) {
    const double w = ways[na][s];
    total += w;
    if (s <= obs) {
      count_le += w;
    }
    if (s >= obs) {
      count_ge += w;
    }
  }
  return std::min(1.0, 2.0 * std::min(count_le, count_ge) / total);
}

double wilcoxon_rank_sum_normal(const std::vector<double>& a,
                                const std::vector<double>& b) {
  require_samples(a, b);
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::sort(pooled.begin(), pooled.end());

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double n = na + nb;

  // Rank-sum of `a` with mid-ranks; the doubled representation is exact, so
  // halving it is too (mid-ranks are integers or exact halves).
  const double w =
      static_cast<double>(doubled_rank_sum(a, pooled)) / 2.0;
  const double mean = na * (n + 1.0) / 2.0;

  // Tie correction: subtract sum(t^3 - t) / (n (n - 1)) over tie groups.
  double tie_sum = 0.0;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j] == pooled[i]) {
      ++j;
    }
    const double t = static_cast<double>(j - i);
    tie_sum += t * t * t - t;
    i = j;
  }
  const double var =
      na * nb / 12.0 * ((n + 1.0) - tie_sum / (n * (n - 1.0)));
  if (var <= 0.0) {
    return 1.0;  // all values tied
  }

  // Continuity correction: shift |W - mean| half a rank toward the mean.
  double shifted = std::abs(w - mean) - 0.5;
  if (shifted < 0.0) {
    shifted = 0.0;
  }
  const double z = shifted / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double wilcoxon_rank_sum(const std::vector<double>& a,
                         const std::vector<double>& b) {
  require_samples(a, b);
  if (a.size() + b.size() <= 20) {
    return wilcoxon_rank_sum_exact(a, b);
  }
  return wilcoxon_rank_sum_normal(a, b);
}

std::vector<SignificanceRow> significance_table(
    const std::map<std::string, std::map<std::string, std::vector<double>>>&
        results,
    const std::string& baseline) {
  std::set<std::string> algorithms;
  for (const auto& [function, cells] : results) {
    const auto base = cells.find(baseline);
    if (base == cells.end() || base->second.empty()) {
      throw std::invalid_argument("baseline algorithm '" + baseline +
                                  "' has no sample for function '" +
                                  function + "'");
    }
    for (const auto& [algorithm, sample] : cells) {
      algorithms.insert(algorithm);
    }
  }

  std::vector<SignificanceRow> rows;
  for (const auto& [function, cells] : results) {
    const std::vector<double>& base = cells.at(baseline);
    for (const std::string& algorithm : algorithms) {
      SignificanceRow row;
      row.function = function;
      row.algorithm = algorithm;
      const auto it = cells.find(algorithm);
      if (it != cells.end() && !it->second.empty()) {
        row.p_value = wilcoxon_rank_sum(it->second, base);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace lpbsa
