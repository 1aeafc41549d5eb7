#include "motifsets/pair_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace motifsets {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_candidates(std::span<const PairCandidate> candidates) {
  if (candidates.size() < 2) throw InvalidParameter("pair search needs at least two candidates");
  const auto n = candidates.front().values.size();
  for (const auto& c : candidates) {
    if (c.values.size() != n) throw InvalidParameter("pair search candidates differ in length");
  }
}

struct Best {
  double dist = kInf;
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool found = false;

  void offer(double d, std::size_t key_a, std::size_t key_b) {
    const auto lo_k = std::min(key_a, key_b);
    const auto hi_k = std::max(key_a, key_b);
    if (!found || pair_precedes(d, lo_k, hi_k, dist, lo, hi)) {
      dist = d;
      lo = lo_k;
      hi = hi_k;
      found = true;
    }
  }

  std::optional<BestPair> result() const {
    if (!found) return std::nullopt;
    return BestPair{lo, hi, dist};
  }
};

std::vector<PairCandidate> window_candidates(const TimeSeries& series, std::span<const std::size_t> starts,
                                             std::size_t n) {
  std::vector<PairCandidate> out;
  out.reserve(starts.size());
  for (const auto s : starts) out.push_back({s, series.window(s, n)});
  return out;
}

}  // namespace

bool pair_precedes(double d1, std::size_t lo1, std::size_t hi1, double d2, std::size_t lo2,
                   std::size_t hi2) noexcept {
  if (d1 != d2) return d1 < d2;
  if (lo1 != lo2) return lo1 < lo2;
  return hi1 < hi2;
}

std::optional<BestPair> brute_force_pair(std::span<const PairCandidate> candidates,
                                         const PairExclusion& excluded) {
  require_candidates(candidates);
  Best best;
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (excluded(i, j)) continue;
      // Inclusive cutoff keeps equal-distance pairs alive for the tie-break.
      const auto d = distance_with_abandon(candidates[i].values, candidates[j].values, best.dist);
      if (d) best.offer(*d, candidates[i].key, candidates[j].key);
    }
  }
  return best.result();
}

std::optional<BestPair> mk_pair(std::span<const PairCandidate> candidates, const MkOptions& options,
                                const PairExclusion& excluded) {
  require_candidates(candidates);
  if (options.references < 1) throw InvalidParameter("reference count q must be >= 1");
  const std::size_t count = candidates.size();
  if (count < options.brute_force_below) return brute_force_pair(candidates, excluded);

  // Reference selection: q distinct candidates drawn with the seeded engine.
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> positions(count);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  const std::size_t ref_count = std::min(options.references, count);
  for (std::size_t k = 0; k < ref_count; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, count - 1);
    std::swap(positions[k], positions[pick(rng)]);
  }

  // ref_dist[r * count + i] = distance from reference r to candidate i.
  std::vector<double> ref_dist(ref_count * count);
  double largest = 0.0;
  std::size_t primary = 0;
  double primary_spread = -1.0;
  for (std::size_t r = 0; r < ref_count; ++r) {
    const auto ref = candidates[positions[r]].values;
    double mean = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double d = distance(ref, candidates[i].values);
      ref_dist[r * count + i] = d;
      largest = std::max(largest, d);
      mean += d;
    }
    mean /= static_cast<double>(count);
    double spread = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double dev = ref_dist[r * count + i] - mean;
      spread += dev * dev;
    }
    if (spread > primary_spread) {
      primary_spread = spread;
      primary = r;
    }
  }

  // Rounding in the reference distances can inflate a lower bound by a few
  // ulps; pruning only beyond this slack keeps the search exact.
  const double slack = 1e-9 * (largest + 1.0);
  const double* primary_row = ref_dist.data() + primary * count;

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return primary_row[a] < primary_row[b]; });

  Best best;
  for (std::size_t offset = 1; offset < count; ++offset) {
    bool reachable = false;
    for (std::size_t j = 0; j + offset < count; ++j) {
      const std::size_t a = order[j];
      const std::size_t b = order[j + offset];
      // Sorted by primary distance, so this gap only grows with offset.
      if (primary_row[b] - primary_row[a] > best.dist + slack) continue;
      reachable = true;
      if (excluded(a, b)) continue;

      bool pruned = false;
      for (std::size_t r = 0; r < ref_count && !pruned; ++r) {
        const double* row = ref_dist.data() + r * count;
        pruned = std::abs(row[a] - row[b]) > best.dist + slack;
      }
      if (pruned) continue;

      const auto d = distance_with_abandon(candidates[a].values, candidates[b].values, best.dist);
      if (d) best.offer(*d, candidates[a].key, candidates[b].key);
    }
    if (!reachable) break;
  }
  return best.result();
}

std::optional<BestPair> brute_force_pair(const TimeSeries& series, std::span<const std::size_t> starts,
                                         std::size_t n) {
  const auto candidates = window_candidates(series, starts, n);
  return brute_force_pair(candidates, [&](std::size_t i, std::size_t j) {
    return trivial_match(candidates[i].key, candidates[j].key, n);
  });
}

std::optional<BestPair> mk_pair(const TimeSeries& series, std::span<const std::size_t> starts,
                                std::size_t n, const MkOptions& options) {
  const auto candidates = window_candidates(series, starts, n);
  return mk_pair(candidates, options, [&](std::size_t i, std::size_t j) {
    return trivial_match(candidates[i].key, candidates[j].key, n);
  });
}

}  // namespace motifsets
