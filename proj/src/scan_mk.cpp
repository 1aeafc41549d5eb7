#include "motifsets/scan_mk.hpp"

#include <algorithm>
#include <limits>

#include "motifsets/pair_finder.hpp"

namespace motifsets {

namespace {

std::size_t medoid(const TimeSeries& series, std::size_t n, std::span<const std::size_t> members) {
  std::size_t best = members.front();
  double best_total = std::numeric_limits<double>::infinity();
  for (const auto m : members) {
    const double total = total_distance(series, n, m, members);
    if (total < best_total) {
      best_total = total;
      best = m;
    }
  }
  return best;
}

std::uint64_t iteration_seed(std::uint64_t seed, std::size_t iteration) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (iteration + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::size_t> condense(const TimeSeries& series, std::size_t n,
                                  std::span<const std::size_t> members, double r) {
  std::vector<std::size_t> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) return sorted;

  // Overlap runs -> one member each.
  std::vector<std::size_t> kept;
  std::size_t run_begin = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    if (i < sorted.size() && trivial_match(sorted[i - 1], sorted[i], n)) continue;
    if (i - run_begin == 1) {
      kept.push_back(sorted[run_begin]);
    } else {
      const std::span<const std::size_t> run(sorted.data() + run_begin, i - run_begin);
      std::size_t pick = run.front();
      double pick_total = std::numeric_limits<double>::infinity();
      for (const auto candidate : run) {
        const double total = total_distance(series, n, candidate, sorted);
        if (total < pick_total) {
          pick_total = total;
          pick = candidate;
        }
      }
      kept.push_back(pick);
    }
    run_begin = i;
  }

  // Greedy clash removal until every remaining pair is within 2r.
  const double width = 2.0 * r;
  const std::size_t k = kept.size();
  std::vector<double> dist(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double d = distance(series.window(kept[i], n), series.window(kept[j], n));
      dist[i * k + j] = d;
      dist[j * k + i] = d;
    }
  }
  std::vector<char> alive(k, 1);
  for (;;) {
    std::size_t victim = k;
    std::size_t victim_clashes = 0;
    double victim_total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!alive[i]) continue;
      std::size_t clashes = 0;
      double total = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (!alive[j] || j == i) continue;
        total += dist[i * k + j];
        if (dist[i * k + j] > width) ++clashes;
      }
      if (clashes == 0) continue;
      // kept is ascending, so a later index on a full tie means a later start
      const bool worse = victim == k || clashes > victim_clashes ||
                         (clashes == victim_clashes && total >= victim_total);
      if (worse) {
        victim = i;
        victim_clashes = clashes;
        victim_total = total;
      }
    }
    if (victim == k) break;
    alive[victim] = 0;
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < k; ++i) {
    if (alive[i]) out.push_back(kept[i]);
  }
  return out;
}

std::vector<MotifSet> scan_mk(const TimeSeries& series, const DiscoveryParams& params) {
  params.validate();
  const std::size_t n = params.window;
  const std::size_t count = series.window_count(n);
  const double width = 2.0 * params.radius;

  std::vector<char> alive(count, 1);
  std::vector<MotifSet> sets;

  for (std::size_t iteration = 0;; ++iteration) {
    std::vector<std::size_t> pool;
    for (std::size_t s = 0; s < count; ++s) {
      if (alive[s]) pool.push_back(s);
    }
    if (pool.size() < 2) break;

    const MkOptions options{params.references, iteration_seed(params.seed, iteration)};
    const auto pair = mk_pair(series, pool, n, options);
    if (!pair || pair->distance > width) break;

    const auto seed_a = series.window(pair->first, n);
    const auto seed_b = series.window(pair->second, n);
    std::vector<std::size_t> members{pair->first, pair->second};

    // D: windows removed during this iteration; also barred from admission.
    std::vector<char> removed(count, 0);
    auto remove_around = [&](std::size_t s) {
      const std::size_t lo = s >= n - 1 ? s - (n - 1) : 0;
      const std::size_t hi = std::min(count - 1, s + (n - 1));
      for (std::size_t j = lo; j <= hi; ++j) {
        if (alive[j]) {
          alive[j] = 0;
          removed[j] = 1;
        }
      }
    };
    remove_around(pair->first);
    remove_around(pair->second);

    std::vector<std::size_t> snapshot;
    for (const auto s : pool) {
      if (alive[s]) snapshot.push_back(s);
    }
    for (const auto s : snapshot) {
      if (removed[s]) continue;
      const auto w = series.window(s, n);
      if (!distance_with_abandon(seed_a, w, width) || !distance_with_abandon(seed_b, w, width)) continue;
      members.push_back(s);
      remove_around(s);
    }

    auto condensed = condense(series, n, members, params.radius);
    const auto rep = medoid(series, n, condensed);
    const auto rep_values = series.window(rep, n);
    sets.push_back(MotifSet{std::move(condensed), {rep_values.begin(), rep_values.end()}, pair->distance});
  }

  std::stable_sort(sets.begin(), sets.end(), [](const MotifSet& a, const MotifSet& b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
    return *a.pair_distance < *b.pair_distance;
  });
  return sets;
}

}  // namespace motifsets
