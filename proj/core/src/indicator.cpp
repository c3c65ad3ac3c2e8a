#include "runfall/indicator.hpp"

#include <algorithm>
#include <cmath>

#include "runfall/error.hpp"

namespace runfall {

std::vector<Step> best_so_far(std::span<const double> history) {
  std::vector<Step> steps;
  for (std::size_t t = 0; t < history.size(); ++t) {
    if (steps.empty() || history[t] < steps.back().value) {
      steps.push_back({static_cast<Evals>(t + 1), history[t]});
    }
  }
  return steps;
}

std::uint64_t noisy_window_size(std::uint64_t t) {
  if (t < 1) throw InvalidArgument("noisy_window_size: t must be >= 1");
  const double l = std::log(static_cast<double>(t) + 3.0);
  const auto w = static_cast<std::uint64_t>(std::ceil(l * l / 2.0));
  return std::clamp<std::uint64_t>(w, 1, t);
}

std::vector<Step> noisy_indicator(std::span<const double> history) {
  std::vector<Step> steps;
  std::vector<double> window;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const std::uint64_t t = i + 1;
    const auto w = static_cast<std::size_t>(noisy_window_size(t));
    window.assign(history.begin() + static_cast<std::ptrdiff_t>(t - w),
                  history.begin() + static_cast<std::ptrdiff_t>(t));
    // ceil(0.01 * w)-th smallest, 1-based.
    const std::size_t rank = (w + 99) / 100;
    auto nth = window.begin() + static_cast<std::ptrdiff_t>(rank - 1);
    std::nth_element(window.begin(), nth, window.end());
    const double value = *nth;
    if (steps.empty() || value < steps.back().value) steps.push_back({t, value});
  }
  return steps;
}

}  // namespace runfall
