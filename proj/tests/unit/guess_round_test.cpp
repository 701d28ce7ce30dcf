#include <gtest/gtest.h>

#include "dsbp/errors.hpp"
#include "dsbp/guess.hpp"
#include "dsbp/rounding.hpp"
#include "oracles.hpp"

namespace dsbp {
namespace {

TEST(Epsilon, Bounds) {
  EXPECT_THROW(Epsilon(1), PreconditionError);
  EXPECT_THROW(Epsilon(1'000'001), PreconditionError);
  const Epsilon eps(10);
  EXPECT_TRUE(eps.strict());
  EXPECT_FALSE(Epsilon(9).strict());
  EXPECT_EQ(eps.working_cap(), Rational(14, 10));
  EXPECT_EQ(eps.inverse_squared(), 100);
  EXPECT_EQ(Epsilon(2).guarantee(), Rational(3, 2) * 3 * 2);
}

TEST(CeilLog, SmallestExponentReachingTarget) {
  const Epsilon eps(2);
  EXPECT_EQ(ceil_log(1, eps), 0);
  EXPECT_EQ(ceil_log(Rational(3, 2), eps), 1);
  EXPECT_EQ(ceil_log(Rational(8, 5), eps), 2);
  EXPECT_EQ(ceil_log(Rational(2, 3), eps), -1);
  EXPECT_EQ(ceil_log(Rational(1, 2), eps), -1);
  EXPECT_EQ(ceil_log(Rational(4, 9), eps), -2);
  EXPECT_THROW(ceil_log(0, eps), PreconditionError);
}

TEST(GuessValues, SingleUnitItemGivesOneGuess) {
  const auto g = guess_values(Instance({1}, 1, 1), Epsilon(2));
  ASSERT_EQ(g.size(), 1U);
  EXPECT_EQ(g[0].exponent, 0);
  EXPECT_EQ(g[0].value, 1);
}

TEST(GuessValues, CountIsLogarithmicInBins) {
  const Instance inst({Rational(5, 2), Rational(5, 2), Rational(5, 2), Rational(5, 2)}, 4, 1);
  const Epsilon eps(2);
  const auto g = guess_values(inst, eps);
  // (3/2)^j from the first power >= 5/2 up to the first >= 10.
  ASSERT_EQ(g.size(), 4U);
  EXPECT_EQ(g.front().value, Rational(27, 8));
  EXPECT_EQ(g.back().value, Rational(729, 64));
  EXPECT_LE(g.size(), 16U);
}

TEST(GuessValues, DegenerateInstanceIsRejected) {
  EXPECT_THROW(guess_values(Instance({0, 0}, 1, 2), Epsilon(4)), PreconditionError);
}

TEST(GuessValues, CoverTheWholeInterval) {
  testing::Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_instance(rng, {10, 6, 1, 4});
    if (inst.total_size() == 0) continue;
    const Epsilon eps(testing::uniform_int(rng, 2, 12));
    const auto g = guess_values(inst, eps);
    ASSERT_FALSE(g.empty());
    const Rational base = 1 + eps.value();
    EXPECT_GE(g.front().value, lower_bound(inst));
    EXPECT_LT(g.front().value / base, lower_bound(inst));
    EXPECT_GE(g.back().value, inst.total_size());
    if (g.size() > 1) EXPECT_LT(g[g.size() - 2].value, inst.total_size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      EXPECT_EQ(g[j].value, power(base, g[j].exponent));
      if (j > 0) {
        EXPECT_EQ(g[j].exponent, g[j - 1].exponent + 1);
        EXPECT_EQ(g[j].value / g[j - 1].value, base);
      }
    }
  }
}

TEST(ScaleInstance, DividesEverySize) {
  const Instance scaled = scale_instance(Instance({3, Rational(1, 2)}, 2, 1), Rational(3, 2));
  EXPECT_EQ(scaled.item(0), 2);
  EXPECT_EQ(scaled.item(1), Rational(1, 3));
  EXPECT_THROW(scale_instance(Instance({1}, 1, 1), 0), PreconditionError);
}

TEST(RoundInstance, ChunksLargeItems) {
  const RoundedInstance ri = round_instance(Instance({150}, 2, 2), Epsilon(10));
  ASSERT_EQ(ri.items.size(), 2U);
  EXPECT_EQ(ri.items[0], 100);
  EXPECT_EQ(ri.items[1], 50);
  EXPECT_EQ(ri.provenance[0].role, ItemRole::Chunk);
  EXPECT_EQ(ri.provenance[1].role, ItemRole::Remainder);
  EXPECT_EQ(ri.provenance[1].original, 0U);
  EXPECT_EQ(ri.cap, Rational(14, 10));
  EXPECT_EQ(ri.cap_units(), 140);
}

TEST(RoundInstance, RoundsMediumItemsUpToTheGrid) {
  const RoundedInstance ri = round_instance(Instance({Rational(137, 1000), Rational(1, 20), 100}, 2, 2), Epsilon(10));
  ASSERT_EQ(ri.items.size(), 3U);
  EXPECT_EQ(ri.items[0], Rational(14, 100));
  EXPECT_EQ(ri.provenance[0].role, ItemRole::RoundedUp);
  EXPECT_EQ(ri.provenance[0].unrounded, Rational(137, 1000));
  EXPECT_EQ(ri.items[1], Rational(1, 20));
  EXPECT_EQ(ri.provenance[1].role, ItemRole::Whole);
  // Exactly 1/eps^2 stays one item.
  EXPECT_EQ(ri.items[2], 100);
  EXPECT_EQ(ri.provenance[2].role, ItemRole::Whole);
}

TEST(RoundInstance, ExactMultipleLeavesNoRemainder) {
  const RoundedInstance ri = round_instance(Instance({200}, 2, 2), Epsilon(10));
  ASSERT_EQ(ri.items.size(), 2U);
  EXPECT_EQ(ri.provenance[1].role, ItemRole::Chunk);
}

TEST(RoundInstance, SmallRemainderIsNotRounded) {
  const RoundedInstance ri = round_instance(Instance({Rational(401, 100)}, 2, 2), Epsilon(2));
  ASSERT_EQ(ri.items.size(), 2U);
  EXPECT_EQ(ri.items[0], 4);
  EXPECT_EQ(ri.items[1], Rational(1, 100));
}

TEST(RoundInstance, Properties) {
  testing::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_instance(rng, {10, 4, 1, 4});
    const Epsilon eps(testing::uniform_int(rng, 2, 10));
    const Size g = testing::uniform_rational(rng, Rational(1, 50), 2, 50);
    const RoundedInstance ri = round_instance(scale_instance(inst, g), eps);
    const Rational e = eps.value();
    std::vector<Size> recovered(inst.size(), 0);
    for (std::size_t i = 0; i < ri.items.size(); ++i) {
      const Size& s = ri.items[i];
      EXPECT_LE(s, eps.inverse_squared());
      if (s >= e) EXPECT_EQ(Rational(s / eps.squared()).get_den(), 1);
      EXPECT_GE(s, ri.provenance[i].unrounded);
      EXPECT_LT(s - ri.provenance[i].unrounded, eps.squared());
      if (ri.provenance[i].unrounded >= e) EXPECT_LE(s, (1 + e) * ri.provenance[i].unrounded);
      recovered[ri.provenance[i].original] += ri.provenance[i].unrounded;
    }
    for (ItemId t = 0; t < inst.size(); ++t) EXPECT_EQ(recovered[t], inst.item(t) / g);
  }
}

TEST(Classify, SplitsAtEps) {
  const RoundedInstance ri =
      round_instance(Instance({Rational(1, 20), Rational(1, 10), Rational(137, 1000), Rational(14, 100)}, 2, 2),
                     Epsilon(10));
  const Classification c = classify(ri);
  EXPECT_EQ(c.small, std::vector<ItemId>({0}));
  EXPECT_EQ(c.large, std::vector<ItemId>({1, 2, 3}));
  EXPECT_EQ(c.distinct_large_sizes, std::vector<Size>({Rational(1, 10), Rational(14, 100)}));
}

TEST(LiftPacking, GivesSurplusBackFromTheLargestPart) {
  const Instance inst({Rational(137, 1000)}, 2, 1);
  const RoundedInstance ri = round_instance(inst, Epsilon(10));
  Packing pack(2);
  pack.add(0, 0, Rational(4, 100));
  pack.add(1, 0, Rational(10, 100));
  const Packing lifted = lift_packing(pack, ri, 1);
  EXPECT_EQ(lifted.part(0, 0), Rational(4, 100));
  EXPECT_EQ(lifted.part(1, 0), Rational(97, 1000));
  EXPECT_TRUE(verify_packing(inst, lifted).feasible);
}

TEST(LiftPacking, RejectsInfeasibleInput) {
  const RoundedInstance ri = round_instance(Instance({1}, 1, 1), Epsilon(2));
  Packing pack(1);
  pack.add(0, 0, Rational(1, 2));
  EXPECT_THROW(lift_packing(pack, ri, 1), PreconditionError);
}

TEST(LiftPacking, Properties) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_instance(rng, {8, 4, 2, 4});
    const Epsilon eps(testing::uniform_int(rng, 2, 6));
    const Size g = testing::uniform_rational(rng, Rational(1, 4), 2, 20);
    const RoundedInstance ri = round_instance(scale_instance(inst, g), eps);
    const Instance prime(ri.items, ri.bins, ri.items.size());
    const Packing pack = testing::random_feasible_packing(rng, prime);
    RoundedInstance loose = ri;
    loose.k = prime.k();
    const Packing lifted = lift_packing(pack, loose, g);
    const Instance target(inst.items(), inst.bins(), prime.k());
    const auto report = verify_packing(target, lifted);
    ASSERT_TRUE(report.feasible) << report.violations.front();
    for (BinId b = 0; b < pack.bins(); ++b) {
      EXPECT_LE(lifted.load(b), g * pack.load(b));
      EXPECT_LE(lifted.bin(b).size(), pack.bin(b).size());
    }
  }
}

}  // namespace
}  // namespace dsbp
