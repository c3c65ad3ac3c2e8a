#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "runfall/error.hpp"
#include "runfall/indicator.hpp"

using namespace runfall;

TEST(BestSoFar, KeepsStrictImprovements) {
  const std::vector<double> h = {3.0, 2.0, 2.0, 1.0};
  EXPECT_EQ(best_so_far(h), (std::vector<Step>{{1, 3.0}, {2, 2.0}, {4, 1.0}}));
  const std::vector<double> one = {1.0};
  EXPECT_EQ(best_so_far(one), (std::vector<Step>{{1, 1.0}}));
  const std::vector<double> rising = {1, 2, 3};
  EXPECT_EQ(best_so_far(rising), (std::vector<Step>{{1, 1.0}}));
}

TEST(BestSoFar, MatchesRunningMinimumOracle) {
  const std::vector<double> h = {9, 4, 7, 4, 3.5, 8, 1, 1, 0.5};
  std::vector<std::uint64_t> evals;
  const auto values = oracle::running_minimum_points(h, &evals);
  const auto steps = best_so_far(h);
  ASSERT_EQ(steps.size(), values.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    EXPECT_EQ(steps[i].evals, evals[i]);
    EXPECT_EQ(steps[i].value, values[i]);
  }
}

TEST(NoisyWindow, HandEvaluatedSizes) {
  EXPECT_EQ(noisy_window_size(1), 1u);
  EXPECT_EQ(noisy_window_size(3), 2u);
  EXPECT_THROW(noisy_window_size(0), InvalidArgument);
}

TEST(NoisyWindow, MatchesFormulaAndCap) {
  for (std::uint64_t t = 1; t <= 5000; ++t) {
    const double l = std::log(static_cast<double>(t) + 3.0);
    const auto expected = std::min<std::uint64_t>(t, static_cast<std::uint64_t>(std::ceil(l * l / 2.0)));
    ASSERT_EQ(noisy_window_size(t), expected) << "t=" << t;
  }
}

TEST(NoisyIndicator, ConstantHistory) {
  const std::vector<double> h = {5, 5, 5, 5};
  EXPECT_EQ(noisy_indicator(h), (std::vector<Step>{{1, 5.0}}));
}

TEST(NoisyIndicator, SmallWindowsTakeTheMinimum) {
  // windows are 1, 2, 2 for t = 1..3
  const std::vector<double> h = {9, 1, 9};
  EXPECT_EQ(noisy_indicator(h), (std::vector<Step>{{1, 9.0}, {2, 1.0}}));
}

TEST(NoisyIndicator, DipSurvivesCompression) {
  std::vector<double> h = {9, 1};
  h.resize(40, 9.0);
  const auto steps = noisy_indicator(h);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[1], (Step{2, 1.0}));
}

TEST(NoisyIndicator, MatchesSortedWindowOracle) {
  std::vector<double> h;
  std::uint64_t state = 12345;
  for (int i = 0; i < 3000; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    h.push_back(static_cast<double>(state >> 40) / 1000.0);
  }
  std::vector<double> quantiles;
  for (std::size_t t = 1; t <= h.size(); ++t) {
    const double l = std::log(static_cast<double>(t) + 3.0);
    const auto w = std::min<std::size_t>(t, static_cast<std::size_t>(std::ceil(l * l / 2.0)));
    std::vector<double> window(h.begin() + static_cast<std::ptrdiff_t>(t - w), h.begin() + static_cast<std::ptrdiff_t>(t));
    std::sort(window.begin(), window.end());
    const auto rank = static_cast<std::size_t>(std::ceil(0.01 * static_cast<double>(w)));
    quantiles.push_back(window[rank - 1]);
  }
  std::vector<std::uint64_t> evals;
  const auto values = oracle::running_minimum_points(quantiles, &evals);
  const auto steps = noisy_indicator(h);
  ASSERT_EQ(steps.size(), values.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    EXPECT_EQ(steps[i].evals, evals[i]);
    EXPECT_EQ(steps[i].value, values[i]);
  }
}
