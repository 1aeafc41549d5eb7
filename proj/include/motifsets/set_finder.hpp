#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "motifsets/core.hpp"

namespace motifsets {

struct RankedWindow {
  std::size_t start = 0;
  std::size_t count = 0;
};

/// Number of non-trivial matches within r for every window. With
/// `early_abandon` the distance kernel stops once a pair exceeds r; the
/// counts are identical either way.
std::vector<std::size_t> count_matches(const TimeSeries& series, std::size_t n, double r,
                                       bool early_abandon = true);

/// Windows ordered by descending count, ties by ascending start.
std::vector<RankedWindow> rank_windows(std::span<const std::size_t> counts);

/// Walks `ranked` in order, skipping zero counts. A window survives when it
/// is more than 2r from every window that survived before it; windows that
/// were removed never block later ones.
std::vector<RankedWindow> separate(const TimeSeries& series, std::size_t n,
                                   std::span<const RankedWindow> ranked, double r);

/// Non-trivial matches of `start` within r, one per overlap run (the one
/// closest to `start`), ascending.
std::vector<std::size_t> condensed_matches(const TimeSeries& series, std::size_t n, std::size_t start,
                                           double r);

/// Ranks windows by match count and separates them. Each survivor yields one
/// motif set holding the survivor and its condensed matches, represented by
/// the survivor's window.
std::vector<MotifSet> set_finder(const TimeSeries& series, std::size_t n, double r);

}  // namespace motifsets
