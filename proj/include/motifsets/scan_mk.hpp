#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "motifsets/core.hpp"

namespace motifsets {

/// Repeatedly takes the best-matching pair of the remaining windows. While
/// that pair lies within 2r, every remaining window within 2r of both pair
/// members joins its motif set. The condensed set is kept and its windows
/// leave the candidate pool along with their trivial matches.
///
/// Sets are returned by descending cardinality, ties by ascending founding
/// pair distance. Representatives are the member with the smallest total
/// distance to the rest of its set.
std::vector<MotifSet> scan_mk(const TimeSeries& series, const DiscoveryParams& params);

/// Collapses each run of mutually overlapping members to the member with the
/// smallest total distance to all of `members`, then removes members until no
/// two remaining ones are more than 2r apart. The member with the most such
/// clashes goes first; on equal clash counts the one with the larger total
/// distance to the others goes.
std::vector<std::size_t> condense(const TimeSeries& series, std::size_t n,
                                  std::span<const std::size_t> members, double r);

}  // namespace motifsets
