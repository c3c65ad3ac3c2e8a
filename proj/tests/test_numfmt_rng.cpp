#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "runfall/error.hpp"
#include "runfall/numfmt.hpp"
#include "runfall/rng.hpp"

using namespace runfall;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(-42.25), "-42.25");
  EXPECT_EQ(format_double(1e-8), "1e-08");
  EXPECT_EQ(format_double(175.0), "175");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  const double awkward = 0.1 + 0.2;
  EXPECT_EQ(parse_double(format_double(awkward)), awkward);
}

TEST(FormatFixed, NoNegativeZero) {
  EXPECT_EQ(format_fixed(-0.0001, 2), "0.00");
  EXPECT_EQ(format_fixed(1.005, 1), "1.0");
}

TEST(ParseDouble, WholeStringOnly) {
  EXPECT_EQ(parse_double("1e6"), 1e6);
  EXPECT_EQ(parse_double("inf"), std::numeric_limits<double>::infinity());
  EXPECT_FALSE(parse_double("1e6x"));
  EXPECT_FALSE(parse_double(""));
  EXPECT_FALSE(parse_double("nan"));
  EXPECT_EQ(parse_uint("42"), 42u);
  EXPECT_FALSE(parse_uint("-1"));
  EXPECT_EQ(trim("  a b \t"), "a b");
}

TEST(Rng, SameSeedSameStream) {
  Rng a(99), b(99);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, UniformIndexInRangeAndCoversValues) {
  Rng rng(5);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.uniform_index(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
  EXPECT_THROW(rng.uniform_index(0), InvalidArgument);
}

TEST(Rng, UnitIntervalHalfOpen) {
  Rng rng(6);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(Rng, ShuffleIsPermutation) {
  Rng rng(7);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  rng.shuffle(std::span<int>(w));
  EXPECT_NE(v, w);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(v, w);
}

TEST(DeriveSeed, DependsOnMasterAndKey) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t m = 0; m < 10; ++m) {
    for (const char* k : {"a", "b", "sphere/5/1", "sphere/5/2"}) seen.insert(derive_seed(m, k));
  }
  EXPECT_EQ(seen.size(), 40u);
  EXPECT_EQ(derive_seed(3, "x"), derive_seed(3, "x"));
}
