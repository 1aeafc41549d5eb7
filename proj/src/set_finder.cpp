#include "motifsets/set_finder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace motifsets {

namespace {

void validate(const TimeSeries& series, std::size_t n, double r) {
  series.window_count(n);
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidParameter("radius r must be a positive finite number");
}

}  // namespace

std::vector<std::size_t> count_matches(const TimeSeries& series, std::size_t n, double r,
                                       bool early_abandon) {
  validate(series, n, r);
  const auto windows = sliding_window(series, n);
  std::vector<std::size_t> counts(windows.size(), 0);
  for (std::size_t i = 0; i < windows.size(); ++i) {
    // j >= i + n skips every trivial match.
    for (std::size_t j = i + n; j < windows.size(); ++j) {
      const bool within = early_abandon
                              ? distance_with_abandon(windows[i].values, windows[j].values, r).has_value()
                              : distance(windows[i].values, windows[j].values) <= r;
      if (within) {
        ++counts[i];
        ++counts[j];
      }
    }
  }
  return counts;
}

std::vector<RankedWindow> rank_windows(std::span<const std::size_t> counts) {
  std::vector<RankedWindow> ranked(counts.size());
  for (std::size_t s = 0; s < counts.size(); ++s) ranked[s] = {s, counts[s]};
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedWindow& a, const RankedWindow& b) { return a.count > b.count; });
  return ranked;
}

std::vector<RankedWindow> separate(const TimeSeries& series, std::size_t n,
                                   std::span<const RankedWindow> ranked, double r) {
  const double width = 2.0 * r;
  std::vector<RankedWindow> survivors;
  for (const auto& candidate : ranked) {
    if (candidate.count == 0) continue;
    const auto w = series.window(candidate.start, n);
    const bool clear = std::all_of(survivors.begin(), survivors.end(), [&](const RankedWindow& s) {
      return !distance_with_abandon(series.window(s.start, n), w, width).has_value();
    });
    if (clear) survivors.push_back(candidate);
  }
  return survivors;
}

std::vector<std::size_t> condensed_matches(const TimeSeries& series, std::size_t n, std::size_t start,
                                           double r) {
  const std::size_t count = series.window_count(n);
  const auto anchor = series.window(start, n);
  std::vector<std::size_t> picks;
  std::size_t previous = 0;
  bool have_previous = false;
  double pick_dist = 0.0;
  for (std::size_t s = 0; s < count; ++s) {
    if (trivial_match(s, start, n)) continue;
    const auto d = distance_with_abandon(anchor, series.window(s, n), r);
    if (!d) continue;
    if (have_previous && trivial_match(previous, s, n)) {
      // same run: keep the closest
      if (*d < pick_dist) {
        picks.back() = s;
        pick_dist = *d;
      }
    } else {
      picks.push_back(s);
      pick_dist = *d;
    }
    previous = s;
    have_previous = true;
  }
  return picks;
}

std::vector<MotifSet> set_finder(const TimeSeries& series, std::size_t n, double r) {
  validate(series, n, r);
  const auto counts = count_matches(series, n, r);
  const auto ranked = rank_windows(counts);
  const auto survivors = separate(series, n, ranked, r);

  std::vector<MotifSet> sets;
  sets.reserve(survivors.size());
  for (const auto& survivor : survivors) {
    auto members = condensed_matches(series, n, survivor.start, r);
    members.insert(std::upper_bound(members.begin(), members.end(), survivor.start), survivor.start);
    const auto w = series.window(survivor.start, n);
    sets.push_back(MotifSet{std::move(members), {w.begin(), w.end()}, std::nullopt});
  }
  return sets;
}

}  // namespace motifsets
