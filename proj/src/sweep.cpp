#include "motifsets/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <thread>

#include "motifsets/cluster_mk.hpp"

namespace motifsets {

namespace {

// values[metric][algorithm][radius]; nullopt marks a failed run.
using DatasetValues = std::vector<std::optional<double>>;

std::size_t cell(std::size_t metric, std::size_t algorithm, std::size_t radius, std::size_t algorithms,
                 std::size_t radii) {
  return (metric * algorithms + algorithm) * radii + radius;
}

double metric_value(SweepMetric metric, const std::vector<MotifSet>& sets, const GroundTruth& truth) {
  switch (metric) {
    case SweepMetric::Sensitivity:
    case SweepMetric::Precision: {
      // single-shape scoring pools every returned set
      std::vector<std::size_t> found;
      for (const auto& set : sets) found.insert(found.end(), set.members.begin(), set.members.end());
      const auto report = score_single(found, truth.all_starts(), truth.shape_length);
      return metric == SweepMetric::Sensitivity ? report.sensitivity : report.precision;
    }
    case SweepMetric::MatchingScore: {
      IndexSets found;
      for (const auto& set : sets) found.push_back(set.members);
      return static_cast<double>(matching_score(found, truth.start_sets(), truth.shape_length));
    }
  }
  return 0.0;
}

DatasetValues evaluate(const SyntheticDataset& data, const SweepConfig& config,
                       std::span<const SweepMetric> metrics) {
  const std::size_t algorithms = config.algorithms.size();
  const std::size_t radii = config.radii.size();
  DatasetValues values(metrics.size() * algorithms * radii);
  const double max_radius = *std::max_element(config.radii.begin(), config.radii.end());

  for (std::size_t a = 0; a < algorithms; ++a) {
    const Algorithm algorithm = config.algorithms[a];
    std::optional<ClusterMergeHistory> history;
    if (algorithm == Algorithm::ClusterMK) {
      try {
        history = ClusterMergeHistory::build(data.series, config.window, max_radius);
      } catch (const std::exception&) {
        continue;
      }
    }
    for (std::size_t r = 0; r < radii; ++r) {
      try {
        const DiscoveryParams params{config.window, config.radii[r], config.references, config.seed};
        const auto sets = history ? history->motif_sets(params.radius) : discover(algorithm, data.series, params);
        for (std::size_t m = 0; m < metrics.size(); ++m) {
          values[cell(m, a, r, algorithms, radii)] = metric_value(metrics[m], sets, data.truth);
        }
      } catch (const std::exception&) {
        // left as nullopt: the cell is reported as failed
      }
    }
  }
  return values;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

}  // namespace

std::string_view to_string(SweepMetric metric) noexcept {
  switch (metric) {
    case SweepMetric::Sensitivity:
      return "sensitivity";
    case SweepMetric::Precision:
      return "precision";
    case SweepMetric::MatchingScore:
      return "matching_score";
  }
  return "unknown";
}

SweepMetric sweep_metric_from_string(std::string_view name) {
  if (name == "sensitivity") return SweepMetric::Sensitivity;
  if (name == "precision") return SweepMetric::Precision;
  if (name == "matching_score" || name == "matching-score") return SweepMetric::MatchingScore;
  throw InvalidParameter("unknown metric '" + std::string(name) + "'");
}

const std::vector<double>& SweepResult::samples(Algorithm algorithm, double radius, SweepMetric metric) const {
  const auto a = std::find(algorithms.begin(), algorithms.end(), algorithm);
  const auto r = std::find(radii.begin(), radii.end(), radius);
  const auto m = std::find(metrics.begin(), metrics.end(), metric);
  if (a == algorithms.end() || r == radii.end() || m == metrics.end()) {
    throw InvalidParameter("no such sweep cell");
  }
  return cell_samples[cell(static_cast<std::size_t>(m - metrics.begin()), static_cast<std::size_t>(a - algorithms.begin()),
                           static_cast<std::size_t>(r - radii.begin()), algorithms.size(), radii.size())];
}

SweepResult run_sweep(std::span<const SyntheticDataset> datasets, const SweepConfig& config) {
  if (datasets.empty()) throw InvalidParameter("sweep needs at least one dataset");
  if (config.radii.empty()) throw InvalidParameter("sweep needs at least one radius");
  if (config.algorithms.empty()) throw InvalidParameter("sweep needs at least one algorithm");

  SweepResult result;
  result.algorithms = config.algorithms;
  result.radii = config.radii;
  result.metrics = config.metrics;
  if (result.metrics.empty()) {
    const bool single = std::all_of(datasets.begin(), datasets.end(),
                                    [](const SyntheticDataset& d) { return d.truth.shapes.size() == 1; });
    if (single) {
      result.metrics = {SweepMetric::Sensitivity, SweepMetric::Precision};
    } else {
      result.metrics = {SweepMetric::MatchingScore};
    }
  }

  std::vector<DatasetValues> per_dataset(datasets.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(datasets.size())));
  auto worker = [&](unsigned id) {
    for (std::size_t d = id; d < datasets.size(); d += threads) {
      per_dataset[d] = evaluate(datasets[d], config, result.metrics);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  const std::size_t algorithms = config.algorithms.size();
  const std::size_t radii = config.radii.size();
  result.cell_samples.resize(result.metrics.size() * algorithms * radii);
  for (std::size_t m = 0; m < result.metrics.size(); ++m) {
    for (std::size_t a = 0; a < algorithms; ++a) {
      for (std::size_t r = 0; r < radii; ++r) {
        const auto c = cell(m, a, r, algorithms, radii);
        auto& samples = result.cell_samples[c];
        bool failed = false;
        for (const auto& values : per_dataset) {
          if (values[c]) {
            samples.push_back(*values[c]);
          } else {
            failed = true;
          }
        }
        result.rows.push_back({config.algorithms[a], config.radii[r], result.metrics[m], mean(samples),
                               standard_error(samples), samples.size(), failed});
      }
    }
  }

  for (std::size_t m = 0; m < result.metrics.size(); ++m) {
    for (std::size_t r = 0; r < radii; ++r) {
      for (std::size_t a = 0; a < algorithms; ++a) {
        for (std::size_t b = a + 1; b < algorithms; ++b) {
          const auto& first = result.cell_samples[cell(m, a, r, algorithms, radii)];
          const auto& second = result.cell_samples[cell(m, b, r, algorithms, radii)];
          if (first.size() < 2 || second.size() < 2) continue;
          result.comparisons.push_back({result.metrics[m], config.radii[r], config.algorithms[a], config.algorithms[b],
                                        mean(first), mean(second), t_test(first, second, config.alpha)});
        }
      }
    }
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "algorithm,r,metric,mean,stderr,n_datasets\n";
  for (const auto& row : result.rows) {
    out += std::string(to_string(row.algorithm)) + ',' + format_number(row.radius) + ',' +
           std::string(to_string(row.metric)) + ',';
    if (row.failed) {
      out += "failed,failed,";
    } else {
      out += format_number(row.mean) + ',' + format_number(row.stderr_) + ',';
    }
    out += std::to_string(row.datasets) + '\n';
  }
  return out;
}

std::string comparisons_csv(const SweepResult& result) {
  std::string out = "algorithm_a,algorithm_b,r,metric,mean_a,mean_b,t,df,p_value,significant\n";
  for (const auto& c : result.comparisons) {
    out += std::string(to_string(c.first)) + ',' + std::string(to_string(c.second)) + ',' + format_number(c.radius) +
           ',' + std::string(to_string(c.metric)) + ',' + format_number(c.mean_first) + ',' +
           format_number(c.mean_second) + ',' + format_number(c.test.t) + ',' +
           format_number(c.test.degrees_of_freedom) + ',' + format_number(c.test.p_value) + ',' +
           (c.test.significant ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace motifsets
