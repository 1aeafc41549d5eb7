#pragma once

// File formats.
//
//   dataset       plain text, one value per line (a single comma-separated
//                 row is accepted on input)
//   ground truth  {"n": int, "shapes": [{"kind": str, "starts": [int, ...]}]}
//   report        {"algorithm": str, "params": {...}, "sets": [{"members":
//                 [int, ...], "representative": [float, ...], "cardinality":
//                 int}], "elapsed_ms": float}
//
// Indexes in ground-truth and report files are 1-based.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "motifsets/core.hpp"
#include "motifsets/discovery.hpp"
#include "motifsets/synth.hpp"

namespace motifsets {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TimeSeries parse_series(std::string_view text);
std::string format_series(const TimeSeries& series);
TimeSeries read_series(const std::filesystem::path& path);
void write_series(const std::filesystem::path& path, const TimeSeries& series);

std::string format_ground_truth(const GroundTruth& truth);
GroundTruth parse_ground_truth(std::string_view text);
GroundTruth read_ground_truth(const std::filesystem::path& path);
void write_ground_truth(const std::filesystem::path& path, const GroundTruth& truth);

struct DiscoveryReport {
  std::string algorithm;
  DiscoveryParams params;
  std::vector<MotifSet> sets;
  std::optional<double> elapsed_ms;

  friend bool operator==(const DiscoveryReport&, const DiscoveryReport&) = default;
};

std::string format_report(const DiscoveryReport& report);
DiscoveryReport parse_report(std::string_view text);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace motifsets
