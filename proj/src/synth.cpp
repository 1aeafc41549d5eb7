#include "motifsets/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <numeric>
#include <random>

namespace motifsets {

std::string_view to_string(ShapeKind kind) noexcept {
  switch (kind) {
    case ShapeKind::Spike:
      return "spike";
    case ShapeKind::Step:
      return "step";
  }
  return "unknown";
}

ShapeKind shape_kind_from_string(std::string_view name) {
  if (name == "spike" || name == "Spike") return ShapeKind::Spike;
  if (name == "step" || name == "Step") return ShapeKind::Step;
  throw InvalidParameter("unknown shape kind '" + std::string(name) + "'");
}

void ShapeSpec::validate() const {
  if (length < 2) throw InvalidParameter("shape length must be >= 2");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw InvalidParameter("shape amplitude must be > 0");
}

std::vector<double> shape_values(const ShapeSpec& spec) {
  spec.validate();
  std::vector<double> out(spec.length);
  switch (spec.kind) {
    case ShapeKind::Spike: {
      const double centre = static_cast<double>(spec.length - 1) / 2.0;
      for (std::size_t k = 0; k < spec.length; ++k) {
        out[k] = spec.amplitude * (1.0 - std::abs(static_cast<double>(k) - centre) / centre);
      }
      break;
    }
    case ShapeKind::Step:
      for (std::size_t k = 0; k < spec.length; ++k) out[k] = k < spec.length / 2 ? 0.0 : spec.amplitude;
      break;
  }
  return out;
}

std::vector<std::size_t> GroundTruth::all_starts() const {
  std::vector<std::size_t> out;
  for (const auto& shape : shapes) out.insert(out.end(), shape.starts.begin(), shape.starts.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> GroundTruth::start_sets() const {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(shapes.size());
  for (const auto& shape : shapes) out.push_back(shape.starts);
  return out;
}

void SynthConfig::validate() const {
  if (min_length < 1 || min_length > max_length) throw InvalidParameter("series length range is empty");
  if (shape_count < 1 || shape_count > 2) throw InvalidParameter("shape count must be 1 or 2");
  if (min_instances < 1 || min_instances > max_instances) throw InvalidParameter("instance range is empty");
  ShapeSpec{ShapeKind::Spike, shape_length, amplitude}.validate();
}

SyntheticDataset generate(const SynthConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);

  const auto length = std::uniform_int_distribution<std::size_t>(config.min_length, config.max_length)(rng);
  std::vector<double> values(length);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (auto& v : values) v = noise(rng);

  std::array<ShapeKind, 2> kinds{ShapeKind::Spike, ShapeKind::Step};
  std::shuffle(kinds.begin(), kinds.end(), rng);

  GroundTruth truth;
  truth.shape_length = config.shape_length;
  std::size_t total = 0;
  std::uniform_int_distribution<std::size_t> instances(config.min_instances, config.max_instances);
  for (std::size_t s = 0; s < config.shape_count; ++s) {
    PlantedShape shape{kinds[s], {}};
    shape.starts.resize(instances(rng));
    total += shape.starts.size();
    truth.shapes.push_back(std::move(shape));
  }
  if (total * config.shape_length > length) {
    throw GenerationError("series of length " + std::to_string(length) + " cannot hold " +
                          std::to_string(total) + " disjoint shapes of length " +
                          std::to_string(config.shape_length));
  }

  // Uniform over disjoint placements: a sorted k-subset of free + k slots,
  // each shifted by the lengths of the shapes before it.
  const std::size_t free_space = length - total * config.shape_length;
  std::vector<std::size_t> slots(free_space + total);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::vector<std::size_t> starts;
  starts.reserve(total);
  std::sample(slots.begin(), slots.end(), std::back_inserter(starts), total, rng);
  for (std::size_t i = 0; i < total; ++i) starts[i] += i * (config.shape_length - 1);
  std::shuffle(starts.begin(), starts.end(), rng);

  std::size_t next = 0;
  for (auto& shape : truth.shapes) {
    const auto profile = shape_values({shape.kind, config.shape_length, config.amplitude});
    for (auto& start : shape.starts) {
      start = starts[next++];
      for (std::size_t k = 0; k < profile.size(); ++k) values[start + k] += profile[k];
    }
    std::sort(shape.starts.begin(), shape.starts.end());
  }

  return SyntheticDataset{TimeSeries(std::move(values)), std::move(truth)};
}

TimeSeries household_profile(std::size_t days, std::uint64_t seed) {
  if (days < 1) throw InvalidParameter("profile needs at least one day");
  constexpr std::size_t kPerDay = 96;
  struct Device {
    std::vector<double> pulse;  // kWh per 15 minutes
    double daily_probability;
  };
  const std::array<Device, 3> devices{{
      {{0.35, 1.80, 1.85, 0.40, 0.25}, 0.45},  // washing machine
      {{1.20, 0.10, 0.10, 1.10}, 0.55},        // dishwasher
      {{2.00, 2.00, 1.50}, 0.30},              // oven
  }};

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> jitter(-0.02, 0.02);
  std::vector<double> values(days * kPerDay, 0.0);
  for (std::size_t day = 0; day < days; ++day) {
    // Each device may run in its own slot of the day, so pulses never collide.
    for (std::size_t d = 0; d < devices.size(); ++d) {
      if (unit(rng) >= devices[d].daily_probability) continue;
      const std::size_t slot_begin = 24 + d * 24;
      std::uniform_int_distribution<std::size_t> offset(0, 24 - devices[d].pulse.size() - 1);
      const std::size_t start = day * kPerDay + slot_begin + offset(rng);
      for (std::size_t k = 0; k < devices[d].pulse.size(); ++k) {
        values[start + k] = std::max(0.0, devices[d].pulse[k] + jitter(rng));
      }
    }
  }
  return TimeSeries(std::move(values));
}

}  // namespace motifsets
