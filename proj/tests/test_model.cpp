#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "runfall/error.hpp"
#include "runfall/model.hpp"

using namespace runfall;

namespace {

RunTrace make_trace(std::string alg, std::string fn, std::uint32_t dim, std::uint64_t inst,
                    std::vector<Step> steps = {{1, 5.0}}, Evals total = 10) {
  return RunTrace("mini", std::move(alg), ProblemTriple{std::move(fn), dim, inst}, 0.0, std::move(steps), total);
}

}  // namespace

TEST(AbsoluteTarget, AddsPrecisionToReference) {
  EXPECT_EQ(absolute_target(0.0, 1e-8), 1e-8);
  EXPECT_EQ(absolute_target(-3.5, 1e2), 96.5);
}

TEST(AbsoluteTarget, NeighborRatioCarriesOver) {
  const double ratio = std::pow(10.0, 0.2);
  const double ref = 12.0;
  const double a = absolute_target(ref, 1.0);
  const double b = absolute_target(ref, ratio);
  EXPECT_NEAR((b - ref) / (a - ref), ratio, 1e-12);
}

TEST(AbsoluteTarget, RejectsBadInput) {
  EXPECT_THROW(absolute_target(0.0, 0.0), InvalidArgument);
  EXPECT_THROW(absolute_target(0.0, -1.0), InvalidArgument);
  EXPECT_THROW(absolute_target(std::numeric_limits<double>::infinity(), 1.0), InvalidArgument);
}

TEST(ProblemQuintuple, Validates) {
  EXPECT_NO_THROW(ProblemQuintuple(ProblemTriple{"sphere", 5, 1}, IndicatorKind::best_so_far, 1e-8));
  EXPECT_THROW(ProblemQuintuple(ProblemTriple{"sphere", 0, 1}, IndicatorKind::best_so_far, 1e-8), InvalidArgument);
  EXPECT_THROW(ProblemQuintuple(ProblemTriple{"sphere", 5, 1}, IndicatorKind::best_so_far, 0.0), InvalidArgument);
}

TEST(RunTrace, ValidatesSteps) {
  EXPECT_THROW(make_trace("a", "f", 1, 1, {}), InvalidArgument);
  EXPECT_THROW(make_trace("a", "f", 1, 1, {{0, 1.0}}), InvalidArgument);
  EXPECT_THROW(make_trace("a", "f", 1, 1, {{2, 1.0}, {2, 0.5}}), InvalidArgument);
  EXPECT_THROW(make_trace("a", "f", 1, 1, {{1, 1.0}, {2, 2.0}}), InvalidArgument);
  EXPECT_THROW(make_trace("a", "f", 1, 1, {{1, std::nan("")}}), InvalidArgument);
  EXPECT_THROW(make_trace("a", "f", 1, 1, {{5, 1.0}}, 4), InvalidArgument);
  EXPECT_THROW(make_trace("a", "f", 0, 1), InvalidArgument);
  EXPECT_NO_THROW(make_trace("a", "f", 1, 1, {{1, 1.0}, {3, 1.0}}, 3));
}

TEST(RunTrace, RepetitionAndRelabel) {
  const RunTrace t = make_trace("a", "f", 2, 3);
  const RunTrace r = t.as_repetition(9);
  EXPECT_TRUE(r.is_repetition());
  EXPECT_EQ(r.triple().instance_id, 9u);
  EXPECT_FALSE(t.is_repetition());
  EXPECT_EQ(t.relabeled("b").algorithm(), "b");
}

TEST(TargetSet, StrictlyDecreasingPositive) {
  EXPECT_NO_THROW(TargetSet({10, 1, 0.1}));
  EXPECT_THROW(TargetSet({}), InvalidArgument);
  EXPECT_THROW(TargetSet({1, 1}), InvalidArgument);
  EXPECT_THROW(TargetSet({1, 10}), InvalidArgument);
  EXPECT_THROW(TargetSet({1, 0}), InvalidArgument);
  const TargetSet t({10, 1});
  EXPECT_EQ(t.final_precision(), 1);
  EXPECT_EQ(t.absolute(-2.0), (std::vector<double>{8.0, -1.0}));
}

TEST(RuntimeKey, OrdersEasiestFirst) {
  RuntimeTable table;
  table.insert({"f", 2, 0.1}, {{5}, {}});
  table.insert({"f", 2, 10}, {{1}, {}});
  table.insert({"f", 1, 1}, {{1}, {}});
  table.insert({"e", 9, 1}, {{1}, {}});
  const auto keys = table.keys();
  ASSERT_EQ(keys.size(), 4u);
  EXPECT_EQ(keys[0].function_id, "e");
  EXPECT_EQ(keys[1].dimension, 1u);
  EXPECT_EQ(keys[2].precision, 10);
  EXPECT_EQ(keys[3].precision, 0.1);
  const auto slice = table.slice("f", 2);
  ASSERT_EQ(slice.size(), 2u);
  EXPECT_EQ(slice[0].first, 10);
}

TEST(RuntimeTable, InsertRejectsInvalidEntries) {
  RuntimeTable table;
  EXPECT_THROW(table.insert({"f", 1, 1}, {}), DataError);
  EXPECT_THROW(table.insert({"f", 1, 1}, {{0}, {}}), DataError);
  EXPECT_THROW(table.insert({"f", 1, 0}, {{1}, {}}), DataError);
  table.insert({"f", 1, 1}, {{1}, {2}});
  EXPECT_THROW(table.insert({"f", 1, 1}, {{1}, {}}), DataError);
  EXPECT_EQ(table.at({"f", 1, 1}).instance_count(), 2u);
  EXPECT_EQ(table.find({"f", 1, 2}), nullptr);
  EXPECT_THROW(table.at({"g", 1, 1}), DataError);
}

TEST(DataSet, DuplicateKeyNamesBothOrigins) {
  DataSet ds;
  ds.insert(make_trace("a", "f", 1, 1), "first.rlog");
  try {
    ds.insert(make_trace("a", "f", 1, 1), "second.rlog");
    FAIL() << "duplicate accepted";
  } catch (const DataError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("first.rlog"), std::string::npos);
    EXPECT_NE(msg.find("second.rlog"), std::string::npos);
  }
}

TEST(DataSet, GroupsAndListings) {
  DataSet ds;
  for (std::uint64_t i = 1; i <= 15; ++i) ds.insert(make_trace("a", "sphere", 5, i));
  ds.insert(make_trace("a", "sphere", 2, 1));
  ds.insert(make_trace("b", "rastrigin", 5, 4));
  EXPECT_EQ(ds.group("a", "sphere", 5).size(), 15u);
  EXPECT_EQ(ds.algorithms(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(ds.dimensions("a"), (std::vector<std::uint32_t>{2, 5}));
  EXPECT_EQ(ds.functions("b"), (std::vector<std::string>{"rastrigin"}));
  EXPECT_EQ(ds.max_instance("a", "sphere", 5), 15u);
  EXPECT_FALSE(ds.max_instance("b", "sphere", 5).has_value());
  EXPECT_EQ(ds.traces().size(), 17u);
}
