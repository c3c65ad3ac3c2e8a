#pragma once
// Straightforward reference computations the library results are checked
// against. Written for clarity, not speed, and sharing no code with core.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "runfall/model.hpp"

namespace oracle {

// Sum of every trial's evaluations over the number of successes.
inline double average_runtime(const std::vector<std::uint64_t>& successes,
                              const std::vector<std::uint64_t>& failures) {
  if (successes.empty()) return std::numeric_limits<double>::infinity();
  std::uint64_t total = 0;
  for (auto s : successes) total += s;
  for (auto f : failures) total += f;
  return static_cast<double>(total) / static_cast<double>(successes.size());
}

// First evaluation count whose value is at or below the target, by linear scan.
inline std::optional<std::uint64_t> first_hit(const runfall::RunTrace& trace, double target) {
  for (const auto& step : trace.steps()) {
    if (step.value <= target) return step.evals;
  }
  return std::nullopt;
}

// Fraction of all samples (missing ones included) that are at most x.
inline double ecdf_at(const std::vector<std::optional<double>>& samples, double x) {
  std::size_t count = 0;
  for (const auto& s : samples) {
    if (s && *s <= x) ++count;
  }
  return static_cast<double>(count) / static_cast<double>(samples.size());
}

inline std::vector<double> running_minimum_points(const std::vector<double>& history,
                                                  std::vector<std::uint64_t>* evals) {
  std::vector<double> values;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < history.size(); ++i) {
    if (history[i] < best) {
      best = history[i];
      values.push_back(best);
      evals->push_back(i + 1);
    }
  }
  return values;
}

// Volume of the n-ball of radius r.
inline double ball_volume(int n, double r) {
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0) * std::pow(r, n);
}

// Median with the mean of the two middle values for even counts.
inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

}  // namespace oracle
