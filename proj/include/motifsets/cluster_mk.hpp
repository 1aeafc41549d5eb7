#pragma once

// Agglomerative motif-set discovery. Every window starts as its own cluster;
// the closest pair of clusters (by centroid distance) is merged while that
// distance is within r. Clusters whose member windows overlap never merge.

#include <cstddef>
#include <span>
#include <vector>

#include "motifsets/core.hpp"

namespace motifsets {

struct Cluster {
  std::vector<double> centroid;
  std::size_t weight = 1;
  std::vector<std::size_t> members;  // ascending window starts

  /// Smallest member start; identifies the cluster in pair tie-breaks.
  std::size_t key() const { return members.front(); }

  static Cluster leaf(const TimeSeries& series, std::size_t n, std::size_t start);
};

/// Weighted centroid average of two clusters.
Cluster merge(const Cluster& a, const Cluster& b);

/// True when any member window of `a` overlaps any member window of `b`.
bool clusters_overlap(const Cluster& a, const Cluster& b, std::size_t n);

struct ClusterMerge {
  std::size_t first_key = 0;
  std::size_t second_key = 0;
  double distance = 0.0;
};

/// The full merge sequence up to a radius. Because the sequence of merges
/// does not depend on the radius (only the stopping point does), one history
/// answers every r <= max_radius.
class ClusterMergeHistory {
 public:
  static ClusterMergeHistory build(const TimeSeries& series, std::size_t n, double max_radius);

  std::span<const ClusterMerge> merges() const noexcept { return merges_; }
  double max_radius() const noexcept { return max_radius_; }

  /// Number of merges executed when the threshold is r.
  std::size_t merges_within(double r) const;

  /// Live clusters after the merges for radius r, in ascending key order.
  std::vector<Cluster> clusters(double r) const;

  /// Clusters of weight >= 2 as motif sets, by descending cardinality then
  /// ascending final merge distance.
  std::vector<MotifSet> motif_sets(double r) const;

 private:
  ClusterMergeHistory(const TimeSeries& series, std::size_t n, double max_radius)
      : series_(series), window_(n), max_radius_(max_radius) {}

  TimeSeries series_;
  std::size_t window_;
  double max_radius_;
  std::vector<ClusterMerge> merges_;
};

std::vector<MotifSet> cluster_mk(const TimeSeries& series, const DiscoveryParams& params);

}  // namespace motifsets
