#include "motifsets/cluster_mk.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

#include "motifsets/pair_finder.hpp"

namespace motifsets {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Neighbour {
  std::size_t slot = kNone;
  double dist = std::numeric_limits<double>::infinity();
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool precedes(const Neighbour& other) const {
    if (slot == kNone) return false;
    if (other.slot == kNone) return true;
    return pair_precedes(dist, lo, hi, other.dist, other.lo, other.hi);
  }
};

Neighbour make_neighbour(std::size_t slot, double d, std::size_t key_a, std::size_t key_b) {
  return {slot, d, std::min(key_a, key_b), std::max(key_a, key_b)};
}

}  // namespace

Cluster Cluster::leaf(const TimeSeries& series, std::size_t n, std::size_t start) {
  const auto w = series.window(start, n);
  return Cluster{{w.begin(), w.end()}, 1, {start}};
}

Cluster merge(const Cluster& a, const Cluster& b) {
  if (a.centroid.size() != b.centroid.size()) throw InvalidParameter("merge: centroid lengths differ");
  Cluster out;
  out.weight = a.weight + b.weight;
  const double wa = static_cast<double>(a.weight);
  const double wb = static_cast<double>(b.weight);
  const double total = static_cast<double>(out.weight);
  out.centroid.resize(a.centroid.size());
  for (std::size_t k = 0; k < a.centroid.size(); ++k) {
    out.centroid[k] = (wa * a.centroid[k] + wb * b.centroid[k]) / total;
  }
  out.members.reserve(a.members.size() + b.members.size());
  std::merge(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
             std::back_inserter(out.members));
  return out;
}

bool clusters_overlap(const Cluster& a, const Cluster& b, std::size_t n) {
  auto i = a.members.begin();
  auto j = b.members.begin();
  while (i != a.members.end() && j != b.members.end()) {
    if (trivial_match(*i, *j, n)) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

ClusterMergeHistory ClusterMergeHistory::build(const TimeSeries& series, std::size_t n,
                                               double max_radius) {
  DiscoveryParams{n, max_radius}.validate();
  ClusterMergeHistory history(series, n, max_radius);
  const std::size_t count = series.window_count(n);

  std::vector<Cluster> clusters;
  clusters.reserve(count);
  for (std::size_t s = 0; s < count; ++s) clusters.push_back(Cluster::leaf(series, n, s));
  std::vector<char> active(count, 1);
  std::vector<Neighbour> nearest(count);

  auto pair_distance = [&](std::size_t i, std::size_t j) -> std::optional<double> {
    if (clusters_overlap(clusters[i], clusters[j], n)) return std::nullopt;
    return distance(clusters[i].centroid, clusters[j].centroid);
  };
  auto refresh = [&](std::size_t i) {
    Neighbour best;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i || !active[j]) continue;
      const auto d = pair_distance(i, j);
      if (!d) continue;
      const auto cand = make_neighbour(j, *d, clusters[i].key(), clusters[j].key());
      if (cand.precedes(best)) best = cand;
    }
    nearest[i] = best;
  };

  // Initial nearest neighbours; each pair is measured once.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + n; j < count; ++j) {
      const double d = distance(clusters[i].centroid, clusters[j].centroid);
      const auto for_i = make_neighbour(j, d, i, j);
      if (for_i.precedes(nearest[i])) nearest[i] = for_i;
      const auto for_j = make_neighbour(i, d, i, j);
      if (for_j.precedes(nearest[j])) nearest[j] = for_j;
    }
  }

  std::vector<double> row(count);
  std::vector<char> row_valid(count);
  for (;;) {
    std::size_t a = kNone;
    for (std::size_t i = 0; i < count; ++i) {
      if (active[i] && nearest[i].slot != kNone && (a == kNone || nearest[i].precedes(nearest[a]))) a = i;
    }
    if (a == kNone || nearest[a].dist > max_radius) break;

    const double merge_distance = nearest[a].dist;
    std::size_t b = nearest[a].slot;
    if (clusters[b].key() < clusters[a].key()) std::swap(a, b);  // a keeps the smaller key
    history.merges_.push_back({clusters[a].key(), clusters[b].key(), merge_distance});
    assert(history.merges_.back().distance <= max_radius);

    clusters[a] = merge(clusters[a], clusters[b]);
    clusters[b] = Cluster{};
    active[b] = 0;
    nearest[b] = Neighbour{};

    Neighbour best_for_a;
    for (std::size_t k = 0; k < count; ++k) {
      row_valid[k] = 0;
      if (k == a || !active[k]) continue;
      const auto d = pair_distance(a, k);
      if (!d) continue;
      row[k] = *d;
      row_valid[k] = 1;
      const auto cand = make_neighbour(k, *d, clusters[a].key(), clusters[k].key());
      if (cand.precedes(best_for_a)) best_for_a = cand;
    }
    nearest[a] = best_for_a;

    for (std::size_t k = 0; k < count; ++k) {
      if (k == a || !active[k]) continue;
      if (nearest[k].slot == a || nearest[k].slot == b) {
        refresh(k);
      } else if (row_valid[k]) {
        const auto cand = make_neighbour(a, row[k], clusters[a].key(), clusters[k].key());
        if (cand.precedes(nearest[k])) nearest[k] = cand;
      }
    }
  }
  return history;
}

std::size_t ClusterMergeHistory::merges_within(double r) const {
  if (r > max_radius_) {
    throw InvalidParameter("radius exceeds the merge history's maximum radius");
  }
  std::size_t executed = 0;
  while (executed < merges_.size() && merges_[executed].distance <= r) ++executed;
  return executed;
}

std::vector<Cluster> ClusterMergeHistory::clusters(double r) const {
  const std::size_t executed = merges_within(r);
  std::map<std::size_t, Cluster> live;
  const std::size_t count = series_.window_count(window_);
  for (std::size_t s = 0; s < count; ++s) live.emplace(s, Cluster::leaf(series_, window_, s));
  for (std::size_t i = 0; i < executed; ++i) {
    const auto& step = merges_[i];
    auto first = live.find(step.first_key);
    auto second = live.find(step.second_key);
    first->second = merge(first->second, second->second);
    live.erase(second);
  }
  std::vector<Cluster> out;
  out.reserve(live.size());
  for (auto& [key, cluster] : live) out.push_back(std::move(cluster));
  return out;
}

std::vector<MotifSet> ClusterMergeHistory::motif_sets(double r) const {
  const std::size_t executed = merges_within(r);
  // Final merge distance per surviving key.
  std::map<std::size_t, double> last_merge;
  for (std::size_t i = 0; i < executed; ++i) {
    last_merge[merges_[i].first_key] = merges_[i].distance;
    last_merge.erase(merges_[i].second_key);
  }
  std::vector<MotifSet> sets;
  for (auto& cluster : clusters(r)) {
    if (cluster.weight < 2) continue;
    const double d = last_merge.at(cluster.key());
    sets.push_back(MotifSet{std::move(cluster.members), std::move(cluster.centroid), d});
  }
  std::stable_sort(sets.begin(), sets.end(), [](const MotifSet& a, const MotifSet& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
    return *a.pair_distance < *b.pair_distance;
  });
  return sets;
}

std::vector<MotifSet> cluster_mk(const TimeSeries& series, const DiscoveryParams& params) {
  params.validate();
  return ClusterMergeHistory::build(series, params.window, params.radius).motif_sets(params.radius);
}

}  // namespace motifsets
