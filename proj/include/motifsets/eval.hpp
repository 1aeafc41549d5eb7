#pragma once

// Scoring of discovered motif sets against planted ground truth.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace motifsets {

struct ScoreReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;    // 0 when undefined
  double sensitivity = 0.0;  // 0 when undefined
  bool precision_defined = false;
  bool sensitivity_defined = false;
};

/// A found index is a true positive when it lies within floor(n/2) of a
/// planted start. Assignment is one-to-one, greedy by ascending index
/// distance, so a second hit on the same planted shape counts as a false
/// positive.
ScoreReport score_single(std::span<const std::size_t> found, std::span<const std::size_t> truth,
                         std::size_t n);

using IndexSets = std::vector<std::vector<std::size_t>>;

/// Minimum total cost of a rectangular assignment (rows to distinct
/// columns, every row of the smaller side assigned).
std::int64_t min_cost_assignment(const std::vector<std::vector<std::int64_t>>& costs);

/// Cost of pairing one found set with one true set: each index pair costs
/// min(|i - j|, n), each index left unpaired costs n.
std::uint64_t set_pair_cost(std::span<const std::size_t> found, std::span<const std::size_t> truth,
                            std::size_t n);

/// Best score over all matchings of found sets to true sets (each set on
/// either side used at most once) and all index pairings within matched
/// sets. Lower is better; 0 means a perfect recovery.
std::uint64_t matching_score(const IndexSets& found, const IndexSets& truth, std::size_t n);

struct TTestResult {
  double t = 0.0;
  double degrees_of_freedom = 0.0;
  double p_value = 1.0;
  bool significant = false;
};

/// Welch's two-sample t-test, two-sided.
TTestResult t_test(std::span<const double> a, std::span<const double> b, double alpha = 0.05);

double mean(std::span<const double> xs);
/// Sample standard deviation over sqrt(size); 0 for fewer than two values.
double standard_error(std::span<const double> xs);

}  // namespace motifsets
