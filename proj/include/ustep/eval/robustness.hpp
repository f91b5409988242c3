#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace ustep::eval {

struct RobustnessReport {
  std::vector<double> values;
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  double iqr = 0;
  double mean = 0;
};

// Inclusive linear interpolation: position (n - 1) * p in the sorted data.
inline double quantile_inclusive(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("quantile of an empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

inline RobustnessReport robustness_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("robustness_stats: no values");
  RobustnessReport r;
  r.values.assign(values.begin(), values.end());
  std::vector<double> sorted = r.values;
  std::sort(sorted.begin(), sorted.end());
  r.min = sorted.front();
  r.max = sorted.back();
  r.q1 = quantile_inclusive(sorted, 0.25);
  r.median = quantile_inclusive(sorted, 0.5);
  r.q3 = quantile_inclusive(sorted, 0.75);
  r.iqr = r.q3 - r.q1;
  r.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  return r;
}

}  // namespace ustep::eval
