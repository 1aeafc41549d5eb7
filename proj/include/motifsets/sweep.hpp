#pragma once

// Parameter sweeps over collections of planted-shape datasets. Each
// (algorithm, radius, metric) cell is summarised by its mean and standard
// error, and algorithms are compared pairwise with Welch t-tests.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "motifsets/discovery.hpp"
#include "motifsets/eval.hpp"
#include "motifsets/synth.hpp"

namespace motifsets {

enum class SweepMetric { Sensitivity, Precision, MatchingScore };

std::string_view to_string(SweepMetric metric) noexcept;
SweepMetric sweep_metric_from_string(std::string_view name);

struct SweepConfig {
  std::vector<Algorithm> algorithms{Algorithm::ScanMK, Algorithm::ClusterMK, Algorithm::SetFinder};
  std::vector<double> radii;
  std::size_t window = 29;
  std::size_t references = 8;
  std::uint64_t seed = 0;
  /// Empty selects by data: sensitivity and precision when every dataset
  /// has a single shape class, the matching score otherwise.
  std::vector<SweepMetric> metrics;
  double alpha = 0.05;
  unsigned threads = 1;
};

struct SweepRow {
  Algorithm algorithm = Algorithm::ScanMK;
  double radius = 0.0;
  SweepMetric metric = SweepMetric::Sensitivity;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t datasets = 0;  // datasets that ran successfully
  bool failed = false;       // at least one dataset failed for this cell
};

struct SweepComparison {
  SweepMetric metric = SweepMetric::Sensitivity;
  double radius = 0.0;
  Algorithm first = Algorithm::ScanMK;
  Algorithm second = Algorithm::ScanMK;
  double mean_first = 0.0;
  double mean_second = 0.0;
  TTestResult test;
};

class SweepResult {
 public:
  std::vector<SweepRow> rows;  // ordered by metric, algorithm, radius
  std::vector<SweepComparison> comparisons;

  /// Per-dataset values for one cell (successful datasets only).
  const std::vector<double>& samples(Algorithm algorithm, double radius, SweepMetric metric) const;

  std::vector<Algorithm> algorithms;
  std::vector<double> radii;
  std::vector<SweepMetric> metrics;
  std::vector<std::vector<double>> cell_samples;  // [metric][algorithm][radius] flattened
};

SweepResult run_sweep(std::span<const SyntheticDataset> datasets, const SweepConfig& config);

/// algorithm,r,metric,mean,stderr,n_datasets
std::string sweep_csv(const SweepResult& result);
/// algorithm_a,algorithm_b,r,metric,mean_a,mean_b,t,df,p_value,significant
std::string comparisons_csv(const SweepResult& result);

}  // namespace motifsets
