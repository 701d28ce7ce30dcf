#include <gtest/gtest.h>

#include "dsbp/errors.hpp"
#include "dsbp/instance.hpp"
#include "dsbp/json_io.hpp"
#include "oracles.hpp"

namespace dsbp {
namespace {

Instance make(std::initializer_list<Rational> items, std::size_t bins, std::size_t k) {
  return Instance(std::vector<Size>(items), bins, k);
}

TEST(Instance, RejectsBadParameters) {
  EXPECT_THROW(make({1}, 0, 1), PreconditionError);
  EXPECT_THROW(make({1}, 1, 0), PreconditionError);
  EXPECT_THROW(make({-1}, 1, 1), PreconditionError);
  EXPECT_EQ(make({1, Rational(1, 2)}, 2, 1).total_size(), Rational(3, 2));
}

TEST(VerifyPacking, SplitThreeItemsOverTwoBins) {
  const Instance inst = make({3, 3, 3}, 2, 2);
  Packing pack(2);
  pack.add(0, 0, 3);
  pack.add(0, 1, Rational(3, 2));
  pack.add(1, 1, Rational(3, 2));
  pack.add(1, 2, 3);
  const auto report = verify_packing(inst, pack);
  EXPECT_TRUE(report.feasible);
  EXPECT_EQ(report.max_load, Rational(9, 2));
}

TEST(VerifyPacking, SingleItemIdentity) {
  Packing pack(1);
  pack.add(0, 0, 1);
  const auto report = verify_packing(make({1}, 1, 1), pack);
  EXPECT_TRUE(report.feasible);
  EXPECT_EQ(report.max_load, 1);
}

TEST(VerifyPacking, ReportsUnderpackedItem) {
  Packing pack(1);
  pack.add(0, 0, Rational(1, 2));
  const auto report = verify_packing(make({1}, 1, 1), pack);
  EXPECT_FALSE(report.feasible);
  ASSERT_EQ(report.violations.size(), 1U);
  EXPECT_NE(report.violations[0].find("item 0 underpacked"), std::string::npos);
}

TEST(VerifyPacking, ReportsCardinalityAndOverpacking) {
  Packing pack(1);
  pack.add(0, 0, 1);
  pack.add(0, 1, 2);
  const auto report = verify_packing(make({1, 1}, 1, 1), pack);
  EXPECT_FALSE(report.feasible);
  ASSERT_EQ(report.violations.size(), 2U);
  EXPECT_NE(report.violations[0].find("cardinality exceeded at bin 0"), std::string::npos);
  EXPECT_NE(report.violations[1].find("item 1 overpacked"), std::string::npos);
}

TEST(VerifyPacking, ZeroItemsTakeExactlyOnePart) {
  const Instance inst = make({0, 1}, 2, 2);
  Packing twice(2);
  twice.add(0, 0, 0);
  twice.add(1, 0, 0);
  twice.add(1, 1, 1);
  EXPECT_FALSE(verify_packing(inst, twice).feasible);
  Packing missing(2);
  missing.add(1, 1, 1);
  EXPECT_FALSE(verify_packing(inst, missing).feasible);
  Packing once(2);
  once.add(0, 0, 0);
  once.add(1, 1, 1);
  EXPECT_TRUE(verify_packing(inst, once).feasible);
}

TEST(VerifyPacking, StructuralErrorsAreNotViolations) {
  Packing wrong_bins(3);
  EXPECT_THROW(verify_packing(make({1}, 1, 1), wrong_bins), StructuralError);
  Packing unknown(1);
  unknown.add(0, 5, 1);
  EXPECT_THROW(verify_packing(make({1}, 1, 1), unknown), StructuralError);
}

TEST(Packing, MergesPartsOfTheSameItem) {
  Packing pack(1);
  pack.add(0, 2, Rational(1, 3));
  pack.add(0, 0, 1);
  pack.add(0, 2, Rational(1, 6));
  ASSERT_EQ(pack.bin(0).size(), 2U);
  EXPECT_EQ(pack.bin(0)[0].item, 0U);
  EXPECT_EQ(pack.part(0, 2), Rational(1, 2));
  EXPECT_EQ(pack.load(0), Rational(3, 2));
  pack.set_part(0, 2, 0);
  EXPECT_EQ(pack.bin(0).size(), 1U);
  EXPECT_THROW(pack.set_part(0, 7, 1), PreconditionError);
}

TEST(CheckFeasible, CountsSlots) {
  EXPECT_FALSE(check_feasible(make({1, 1, 1}, 1, 2)));
  EXPECT_TRUE(check_feasible(make({1, 1, 1}, 1, 3)));
  EXPECT_TRUE(check_feasible(make({}, 1, 1)));
  EXPECT_FALSE(check_feasible(make({0, 0}, 1, 1)));
}

TEST(LowerBound, IsTotalOverBins) {
  EXPECT_EQ(lower_bound(make({3, 3, 3}, 2, 2)), Rational(9, 2));
  EXPECT_EQ(lower_bound(make({6, 2}, 2, 1)), 4);
  EXPECT_EQ(lower_bound(make({}, 5, 1)), 0);
}

TEST(FractionalOptNoCardinality, Examples) {
  auto [value, pack] = fractional_opt_no_cardinality(make({3, 3, 3}, 2, 2));
  EXPECT_EQ(value, Rational(9, 2));
  EXPECT_EQ(pack.part(0, 1), Rational(3, 2));
  EXPECT_EQ(pack.part(1, 1), Rational(3, 2));
  EXPECT_EQ(fractional_opt_no_cardinality(make({1, 1, 1, 1}, 2, 2)).first, 2);
  EXPECT_EQ(fractional_opt_no_cardinality(make({}, 3, 1)).first, 0);
}

TEST(FractionalOptNoCardinality, ReachesTotalOverBinsOnRandomInstances) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance drawn = testing::random_instance(rng, {12, 5, 1, 4});
    // Cardinality is ignored here, so allow every item in every bin.
    const Instance inst(drawn.items(), drawn.bins(), drawn.size() + 1);
    auto [value, pack] = fractional_opt_no_cardinality(inst);
    const auto report = verify_packing(inst, pack);
    ASSERT_TRUE(report.feasible) << report.violations.front();
    EXPECT_EQ(report.max_load, lower_bound(inst));
    EXPECT_EQ(value, lower_bound(inst));
  }
}

TEST(FeasiblePackings, NeverBeatTheLowerBound) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_instance(rng, {10, 4, 1, 3});
    const Packing pack = testing::random_feasible_packing(rng, inst);
    const auto report = verify_packing(inst, pack);
    ASSERT_TRUE(report.feasible) << report.violations.front();
    EXPECT_GE(report.max_load, lower_bound(inst));
  }
}

TEST(RoundRobinZeroPacking, UsesOneSlotPerItem) {
  const Instance inst = make({0, 0, 0, 0, 0}, 3, 2);
  const auto report = verify_packing(inst, round_robin_zero_packing(inst));
  EXPECT_TRUE(report.feasible);
  EXPECT_EQ(report.max_load, 0);
}

TEST(Json, InstanceAndPackingRoundTrip) {
  const auto j = nlohmann::json::parse(R"({"k": 2, "bins": 3, "items": ["0.137", "3/2", 4]})");
  const Instance inst = instance_from_json(j);
  EXPECT_EQ(inst.item(0), Rational(137, 1000));
  EXPECT_EQ(inst.item(1), Rational(3, 2));
  EXPECT_EQ(inst.item(2), 4);
  const Instance again = instance_from_json(instance_to_json(inst));
  EXPECT_EQ(again.items(), inst.items());
  EXPECT_EQ(again.bins(), 3U);
  EXPECT_EQ(again.k(), 2U);

  Packing pack(2);
  pack.add(0, 1, Rational(3, 4));
  pack.add(1, 1, Rational(3, 4));
  EXPECT_EQ(packing_from_json(packing_to_json(pack)), pack);
}

TEST(Json, MalformedInputIsAFormatError) {
  for (const char* text : {R"([])", R"({"bins": 1, "items": []})", R"({"k": 1, "bins": 0, "items": []})",
                           R"({"k": 1, "bins": 1, "items": ["x"]})", R"({"k": -1, "bins": 1, "items": []})",
                           R"({"k": 1, "bins": 1, "items": [0.5]})"}) {
    EXPECT_THROW(instance_from_json(nlohmann::json::parse(text)), FormatError) << text;
  }
  EXPECT_THROW(packing_from_json(nlohmann::json::parse(R"({"bins": [[{"item": 0}]]})")), FormatError);
  EXPECT_THROW(load_instance("/nonexistent/file.json"), FormatError);
}

}  // namespace
}  // namespace dsbp
