#pragma once

#include <cstddef>
#include <vector>

#include "motifsets/core.hpp"

namespace fixture {

// Noise-free series: a steep ramp (so no two background windows are alike)
// with exact copies of `shape` written at each start.
inline motifsets::TimeSeries on_ramp(std::size_t m, const std::vector<std::pair<std::vector<double>, std::vector<std::size_t>>>& plants) {
  std::vector<double> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = 100.0 + 10.0 * static_cast<double>(i);
  for (const auto& [shape, starts] : plants) {
    for (auto s : starts) {
      for (std::size_t k = 0; k < shape.size(); ++k) v[s + k] = shape[k];
    }
  }
  return motifsets::TimeSeries(std::move(v));
}

}  // namespace fixture
