#pragma once

// Foundational types shared by every motif-set algorithm: the series itself,
// windows into it, the Euclidean distance kernels and the trivial-match rule.
//
// Window starts are 0-based throughout the C++ API. Anything that is written
// to disk (reports, ground-truth sidecars) is converted to 1-based indexes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace motifsets {

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An ordered, non-empty sequence of finite real observations.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }

  /// The length-`n` window starting at `start`. Throws InvalidParameter when
  /// the window does not fit.
  std::span<const double> window(std::size_t start, std::size_t n) const;

  /// Number of length-`n` windows, m - (n - 1).
  std::size_t window_count(std::size_t n) const;

 private:
  std::vector<double> values_;
};

struct Subsequence {
  std::size_t start = 0;
  std::span<const double> values;

  std::size_t length() const noexcept { return values.size(); }
};

struct DiscoveryParams {
  std::size_t window = 0;      // n
  double radius = 0.0;         // r
  std::size_t references = 8;  // q, reference windows used by the pair finder
  std::uint64_t seed = 0;      // reference selection

  void validate() const;

  friend bool operator==(const DiscoveryParams&, const DiscoveryParams&) = default;
};

/// A set of mutually non-overlapping window starts plus the motif that
/// represents them.
struct MotifSet {
  std::vector<std::size_t> members;  // ascending, 0-based
  std::vector<double> representative;
  std::optional<double> pair_distance;

  std::size_t cardinality() const noexcept { return members.size(); }

  friend bool operator==(const MotifSet&, const MotifSet&) = default;
};

/// All m - (n - 1) windows of length n, in ascending start order. The
/// returned subsequences view the series' storage.
std::vector<Subsequence> sliding_window(const TimeSeries& series, std::size_t n);

double distance(std::span<const double> a, std::span<const double> b);

/// Euclidean distance when it is <= cutoff, std::nullopt otherwise. The
/// summation order is the same as distance(), so a returned value is
/// bit-identical to it.
std::optional<double> distance_with_abandon(std::span<const double> a,
                                            std::span<const double> b,
                                            double cutoff);

/// Two windows of width n trivially match when their index ranges intersect.
constexpr bool trivial_match(std::size_t a, std::size_t b, std::size_t n) noexcept {
  return (a > b ? a - b : b - a) < n;
}

/// Sum of distances from the window at `start` to every window in `others`.
double total_distance(const TimeSeries& series, std::size_t n, std::size_t start,
                      std::span<const std::size_t> others);

}  // namespace motifsets
