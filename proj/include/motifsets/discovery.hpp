#pragma once

#include <string_view>
#include <vector>

#include "motifsets/core.hpp"

namespace motifsets {

enum class Algorithm { ScanMK, ClusterMK, SetFinder };

/// "scan-mk", "cluster-mk", "set-finder"
std::string_view to_string(Algorithm algorithm) noexcept;
Algorithm algorithm_from_string(std::string_view name);

std::vector<MotifSet> discover(Algorithm algorithm, const TimeSeries& series, const DiscoveryParams& params);

}  // namespace motifsets
