#include "motifsets/core.hpp"

#include <cmath>
#include <limits>

namespace motifsets {

namespace {

void require_same_length(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidParameter("distance: windows differ in length (" + std::to_string(a.size()) +
                           " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidParameter("time series must contain at least one value");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidParameter("time series value at index " + std::to_string(i) + " is not finite");
    }
  }
}

std::size_t TimeSeries::window_count(std::size_t n) const {
  if (n < 1 || n > values_.size()) {
    throw InvalidParameter("window width " + std::to_string(n) + " outside [1, " +
                           std::to_string(values_.size()) + "]");
  }
  return values_.size() - n + 1;
}

std::span<const double> TimeSeries::window(std::size_t start, std::size_t n) const {
  if (start >= window_count(n)) {
    throw InvalidParameter("window start " + std::to_string(start) + " out of range");
  }
  return std::span<const double>(values_).subspan(start, n);
}

void DiscoveryParams::validate() const {
  if (window < 2) throw InvalidParameter("window width n must be >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidParameter("radius r must be a positive finite number");
  if (references < 1) throw InvalidParameter("reference count q must be >= 1");
}

std::vector<Subsequence> sliding_window(const TimeSeries& series, std::size_t n) {
  const std::size_t count = series.window_count(n);
  std::vector<Subsequence> out;
  out.reserve(count);
  const auto values = series.values();
  for (std::size_t a = 0; a < count; ++a) out.push_back({a, values.subspan(a, n)});
  return out;
}

double distance(std::span<const double> a, std::span<const double> b) {
  require_same_length(a, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

std::optional<double> distance_with_abandon(std::span<const double> a, std::span<const double> b,
                                            double cutoff) {
  require_same_length(a, b);
  if (std::isnan(cutoff) || cutoff < 0.0) throw InvalidParameter("abandon cutoff must be >= 0");
  // The loop bound is padded slightly above cutoff^2 so that an abandon can
  // never fire for a pair whose rounded distance equals the cutoff.
  const double bound = cutoff * cutoff * (1.0 + 1e-12);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
    if (sum > bound) return std::nullopt;
  }
  const double d = std::sqrt(sum);
  if (d > cutoff) return std::nullopt;
  return d;
}

double total_distance(const TimeSeries& series, std::size_t n, std::size_t start,
                      std::span<const std::size_t> others) {
  const auto w = series.window(start, n);
  double total = 0.0;
  for (const auto o : others) total += distance(w, series.window(o, n));
  return total;
}

}  // namespace motifsets
