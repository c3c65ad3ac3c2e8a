#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "runfall/model.hpp"

namespace runfall {

/// Strict running-minimum points of an objective history; evaluation t of
/// the history has evals = t (1-based). Empty history gives an empty result.
std::vector<Step> best_so_far(std::span<const double> history);

/// ceil(ln(t + 3)^2 / 2), never larger than t. t must be >= 1.
std::uint64_t noisy_window_size(std::uint64_t t);

/// Quantile level of the noisy indicator.
inline constexpr double kNoisyQuantile = 0.01;

/// At each t: the ceil(0.01 w)-th smallest of the last w = noisy_window_size(t)
/// values (lower empirical 1%-quantile), then compressed to strict
/// improvements like best_so_far.
std::vector<Step> noisy_indicator(std::span<const double> history);

}  // namespace runfall
