#pragma once

// Planted-shape benchmark data: i.i.d. N(0, 1) noise with one or two shape
// classes added at random, non-overlapping locations.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motifsets/core.hpp"

namespace motifsets {

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ShapeKind { Spike, Step };

std::string_view to_string(ShapeKind kind) noexcept;
ShapeKind shape_kind_from_string(std::string_view name);

struct ShapeSpec {
  ShapeKind kind = ShapeKind::Spike;
  std::size_t length = 29;
  double amplitude = 10.0;

  void validate() const;
};

/// Spike: triangular ramp 0 -> amplitude -> 0. Step: zero for the first
/// floor(length / 2) points, amplitude for the rest.
std::vector<double> shape_values(const ShapeSpec& spec);

struct PlantedShape {
  ShapeKind kind = ShapeKind::Spike;
  std::vector<std::size_t> starts;  // ascending, 0-based
};

struct GroundTruth {
  std::size_t shape_length = 0;
  std::vector<PlantedShape> shapes;

  /// Every planted start across all shape classes, ascending.
  std::vector<std::size_t> all_starts() const;
  /// One index set per shape class.
  std::vector<std::vector<std::size_t>> start_sets() const;
};

struct SynthConfig {
  std::size_t min_length = 500;
  std::size_t max_length = 1000;
  std::size_t shape_count = 1;  // 1 or 2
  std::size_t min_instances = 3;
  std::size_t max_instances = 5;
  std::size_t shape_length = 29;
  double amplitude = 10.0;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SyntheticDataset {
  TimeSeries series;
  GroundTruth truth;
};

/// Deterministic in the config (including its seed). Throws GenerationError
/// when the instances cannot be placed without overlap.
SyntheticDataset generate(const SynthConfig& config);

/// Household-style usage profile for exercising the discovery tools on
/// electricity-like data: mostly zeros (15-minute Wh readings) with a few
/// recurring appliance pulses. `days` days of 96 readings each.
TimeSeries household_profile(std::size_t days, std::uint64_t seed);

}  // namespace motifsets
