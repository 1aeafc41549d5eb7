#pragma once

// Exact best-matching pair search.
//
// Candidates are arbitrary equal-length vectors identified by a unique key
// (a window start, or the smallest member start of a cluster). Pairs for
// which the exclusion predicate holds are never considered. Among pairs at
// equal distance the lexicographically smallest (low key, high key) wins, so
// the brute-force scan and the pruned search return identical pairs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "motifsets/core.hpp"

namespace motifsets {

struct BestPair {
  std::size_t first = 0;   // smaller key
  std::size_t second = 0;  // larger key
  double distance = 0.0;
};

struct PairCandidate {
  std::size_t key = 0;
  std::span<const double> values;
};

/// Called with positions into the candidate list; true means the pair may
/// not be matched.
using PairExclusion = std::function<bool(std::size_t, std::size_t)>;

struct MkOptions {
  std::size_t references = 8;
  std::uint64_t seed = 0;
  /// Below this many candidates the exhaustive scan is used directly.
  std::size_t brute_force_below = 32;
};

/// True when (d1, pair1) orders strictly before (d2, pair2) under the
/// distance-then-keys tie-break.
bool pair_precedes(double d1, std::size_t lo1, std::size_t hi1, double d2, std::size_t lo2,
                   std::size_t hi2) noexcept;

std::optional<BestPair> brute_force_pair(std::span<const PairCandidate> candidates,
                                         const PairExclusion& excluded);

/// Reference-point search: distances to q randomly chosen reference
/// candidates order the scan and give triangle-inequality lower bounds.
/// Always returns the same pair as brute_force_pair.
std::optional<BestPair> mk_pair(std::span<const PairCandidate> candidates, const MkOptions& options,
                                const PairExclusion& excluded);

// Window-set conveniences: candidates are the windows at `starts`, and
// overlapping windows are excluded.
std::optional<BestPair> brute_force_pair(const TimeSeries& series, std::span<const std::size_t> starts,
                                         std::size_t n);
std::optional<BestPair> mk_pair(const TimeSeries& series, std::span<const std::size_t> starts,
                                std::size_t n, const MkOptions& options);

}  // namespace motifsets
