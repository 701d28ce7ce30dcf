#include <gtest/gtest.h>

#include "dsbp/errors.hpp"
#include "dsbp/generator.hpp"

namespace dsbp {
namespace {

TEST(Generate, SameSeedSameInstance) {
  GenSpec spec;
  spec.n = 12;
  spec.m = 4;
  spec.k = 3;
  spec.seed = 99;
  for (auto dist : {SizeDistribution::Uniform, SizeDistribution::Bimodal, SizeDistribution::IntegerGrid}) {
    spec.dist = dist;
    EXPECT_EQ(generate(spec).items(), generate(spec).items());
  }
  spec.dist = SizeDistribution::Uniform;
  GenSpec other = spec;
  other.seed = 100;
  EXPECT_NE(generate(spec).items(), generate(other).items());
}

TEST(Generate, UniformStaysInRangeOnTheGrid) {
  GenSpec spec;
  spec.n = 10;
  spec.m = 5;
  spec.k = 2;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    spec.seed = seed;
    const Instance inst = generate(spec);
    ASSERT_EQ(inst.size(), 10U);
    EXPECT_EQ(inst.bins(), 5U);
    EXPECT_EQ(inst.k(), 2U);
    for (const auto& s : inst.items()) {
      EXPECT_GE(s, 0);
      EXPECT_LE(s, 1);
      EXPECT_EQ(Rational(s * 1'000'000).get_den(), 1);
    }
  }
}

TEST(Generate, GridSizesAreMultiplesOfTheStep) {
  GenSpec spec;
  spec.n = 20;
  spec.m = 10;
  spec.dist = SizeDistribution::IntegerGrid;
  spec.step = Rational(1, 4);
  spec.lo = Rational(1, 3);
  spec.hi = 3;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    spec.seed = seed;
    const Instance inst = generate(spec);
    for (const auto& s : inst.items()) {
      EXPECT_EQ(Rational(s / spec.step).get_den(), 1);
      EXPECT_GE(s, Rational(1, 2));
      EXPECT_LE(s, 3);
    }
  }
}

TEST(Generate, BimodalUsesTheOuterBands) {
  GenSpec spec;
  spec.n = 40;
  spec.m = 20;
  spec.dist = SizeDistribution::Bimodal;
  spec.hi = 2;
  spec.small_fraction = Rational(1, 2);
  int low = 0;
  int high = 0;
  const Instance inst = generate(spec);
  for (const auto& s : inst.items()) {
    if (s <= Rational(1, 5)) {
      ++low;
    } else {
      EXPECT_GE(s, Rational(9, 5));
      ++high;
    }
  }
  EXPECT_GT(low, 0);
  EXPECT_GT(high, 0);
}

TEST(Generate, RejectsBadSpecs) {
  GenSpec spec;
  spec.n = 5;
  spec.m = 2;
  spec.k = 2;
  EXPECT_THROW(generate(spec), PreconditionError);
  spec.feasible = false;
  EXPECT_EQ(generate(spec).size(), 5U);
  spec.n = 1;
  spec.lo = 2;
  spec.hi = 1;
  EXPECT_THROW(generate(spec), PreconditionError);
  spec.lo = Rational(1, 3);
  spec.hi = Rational(2, 5);
  spec.dist = SizeDistribution::IntegerGrid;
  spec.step = Rational(1, 2);
  EXPECT_THROW(generate(spec), PreconditionError);
  EXPECT_THROW(parse_distribution("normal"), FormatError);
  EXPECT_EQ(parse_distribution("grid"), SizeDistribution::IntegerGrid);
}

}  // namespace
}  // namespace dsbp
