#include "motifsets/discovery.hpp"

#include <string>

#include "motifsets/cluster_mk.hpp"
#include "motifsets/scan_mk.hpp"
#include "motifsets/set_finder.hpp"

namespace motifsets {

std::string_view to_string(Algorithm algorithm) noexcept {
  switch (algorithm) {
    case Algorithm::ScanMK:
      return "scan-mk";
    case Algorithm::ClusterMK:
      return "cluster-mk";
    case Algorithm::SetFinder:
      return "set-finder";
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "scan-mk") return Algorithm::ScanMK;
  if (name == "cluster-mk") return Algorithm::ClusterMK;
  if (name == "set-finder") return Algorithm::SetFinder;
  throw InvalidParameter("unknown algorithm '" + std::string(name) + "'");
}

std::vector<MotifSet> discover(Algorithm algorithm, const TimeSeries& series, const DiscoveryParams& params) {
  params.validate();
  switch (algorithm) {
    case Algorithm::ScanMK:
      return scan_mk(series, params);
    case Algorithm::ClusterMK:
      return cluster_mk(series, params);
    case Algorithm::SetFinder:
      return set_finder(series, params.window, params.radius);
  }
  throw InvalidParameter("unknown algorithm");
}

}  // namespace motifsets
