#include "motifsets/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include <boost/math/distributions/students_t.hpp>

#include "motifsets/core.hpp"

namespace motifsets {

namespace {

std::size_t index_gap(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

std::vector<std::size_t> unique_sorted(std::span<const std::size_t> xs) {
  std::vector<std::size_t> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

ScoreReport score_single(std::span<const std::size_t> found, std::span<const std::size_t> truth,
                         std::size_t n) {
  if (n < 1) throw InvalidParameter("shape length must be >= 1");
  const auto hits = unique_sorted(found);
  const auto starts = unique_sorted(truth);
  const std::size_t tolerance = n / 2;

  // (gap, found position, truth position) for every pair within tolerance.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs;
  for (std::size_t f = 0; f < hits.size(); ++f) {
    for (std::size_t t = 0; t < starts.size(); ++t) {
      const auto gap = index_gap(hits[f], starts[t]);
      if (gap <= tolerance) pairs.emplace_back(gap, f, t);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<char> hit_used(hits.size(), 0);
  std::vector<char> start_used(starts.size(), 0);
  ScoreReport report;
  for (const auto& [gap, f, t] : pairs) {
    if (hit_used[f] || start_used[t]) continue;
    hit_used[f] = start_used[t] = 1;
    ++report.tp;
  }
  report.fp = hits.size() - report.tp;
  report.fn = starts.size() - report.tp;
  if (report.tp + report.fp > 0) {
    report.precision = static_cast<double>(report.tp) / static_cast<double>(report.tp + report.fp);
    report.precision_defined = true;
  }
  if (report.tp + report.fn > 0) {
    report.sensitivity = static_cast<double>(report.tp) / static_cast<double>(report.tp + report.fn);
    report.sensitivity_defined = true;
  }
  return report;
}

std::int64_t min_cost_assignment(const std::vector<std::vector<std::int64_t>>& costs) {
  if (costs.empty() || costs.front().empty()) return 0;
  const std::size_t rows = costs.size();
  const std::size_t cols = costs.front().size();
  for (const auto& row : costs) {
    if (row.size() != cols) throw InvalidParameter("assignment cost matrix is ragged");
  }
  if (rows > cols) {
    std::vector<std::vector<std::int64_t>> transposed(cols, std::vector<std::int64_t>(rows));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) transposed[j][i] = costs[i][j];
    }
    return min_cost_assignment(transposed);
  }

  // Shortest augmenting path with potentials (Kuhn-Munkres), 1-based.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<std::size_t> owner(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<std::int64_t> min_reduced(cols + 1, kInf);
    std::vector<char> used(cols + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        const std::int64_t reduced = costs[i0 - 1][j - 1] - u[i0] - v[j];
        if (reduced < min_reduced[j]) {
          min_reduced[j] = reduced;
          way[j] = j0;
        }
        if (min_reduced[j] < delta) {
          delta = min_reduced[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          min_reduced[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::int64_t total = 0;
  for (std::size_t j = 1; j <= cols; ++j) {
    if (owner[j] != 0) total += costs[owner[j] - 1][j - 1];
  }
  return total;
}

std::uint64_t set_pair_cost(std::span<const std::size_t> found, std::span<const std::size_t> truth,
                            std::size_t n) {
  const auto width = static_cast<std::int64_t>(n);
  if (found.empty() || truth.empty()) return n * (found.size() + truth.size());
  std::vector<std::vector<std::int64_t>> costs(found.size(), std::vector<std::int64_t>(truth.size()));
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < truth.size(); ++j) {
      costs[i][j] = std::min(static_cast<std::int64_t>(index_gap(found[i], truth[j])), width);
    }
  }
  // A pair never costs more than n, two unpaired indexes cost 2n: pair as
  // many as the smaller side allows.
  const std::size_t unpaired = found.size() > truth.size() ? found.size() - truth.size()
                                                           : truth.size() - found.size();
  return static_cast<std::uint64_t>(min_cost_assignment(costs)) + n * unpaired;
}

std::uint64_t matching_score(const IndexSets& found, const IndexSets& truth, std::size_t n) {
  if (n < 1) throw InvalidParameter("shape length must be >= 1");
  const std::size_t k = found.size();
  const std::size_t t = truth.size();
  if (k + t == 0) return 0;

  // Square matrix: found sets + dummy rows against true sets + dummy columns.
  // A dummy partner means the set stays unmatched and pays n per index.
  const std::size_t size = k + t;
  std::vector<std::vector<std::int64_t>> costs(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < k; ++i) {
    const auto alone = static_cast<std::int64_t>(n * found[i].size());
    for (std::size_t j = 0; j < t; ++j) costs[i][j] = static_cast<std::int64_t>(set_pair_cost(found[i], truth[j], n));
    for (std::size_t j = t; j < size; ++j) costs[i][j] = alone;
  }
  for (std::size_t i = k; i < size; ++i) {
    for (std::size_t j = 0; j < t; ++j) costs[i][j] = static_cast<std::int64_t>(n * truth[j].size());
  }
  return static_cast<std::uint64_t>(min_cost_assignment(costs));
}

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

namespace {

double sample_variance(std::span<const double> xs, double centre) {
  double ss = 0.0;
  for (const double x : xs) ss += (x - centre) * (x - centre);
  return ss / static_cast<double>(xs.size() - 1);
}

}  // namespace

double standard_error(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  return std::sqrt(sample_variance(xs, mean(xs)) / static_cast<double>(xs.size()));
}

TTestResult t_test(std::span<const double> a, std::span<const double> b, double alpha) {
  if (a.size() < 2 || b.size() < 2) throw InvalidParameter("t-test needs at least two values per sample");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidParameter("alpha must lie in (0, 1)");
  const double mean_a = mean(a);
  const double mean_b = mean(b);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double qa = sample_variance(a, mean_a) / na;
  const double qb = sample_variance(b, mean_b) / nb;

  TTestResult result;
  const double se2 = qa + qb;
  if (se2 == 0.0) {
    if (mean_a == mean_b) return result;
    result.t = mean_a > mean_b ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
    result.degrees_of_freedom = na + nb - 2.0;
    result.p_value = 0.0;
    result.significant = true;
    return result;
  }
  result.t = (mean_a - mean_b) / std::sqrt(se2);
  result.degrees_of_freedom = se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  const boost::math::students_t dist(result.degrees_of_freedom);
  result.p_value = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(result.t))));
  result.significant = result.p_value < alpha;
  return result;
}

}  // namespace motifsets
