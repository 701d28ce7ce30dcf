#include <gtest/gtest.h>

#include "dsbp/errors.hpp"
#include "dsbp/guess.hpp"
#include "dsbp/lp_rounding.hpp"
#include "oracles.hpp"

namespace dsbp {
namespace {

FractionalAssignment two_bin_split() {
  FractionalAssignment fa;
  fa.x = {{Rational(1, 2), Rational(1, 2)}};
  fa.size = {{1, 1}};
  fa.forbidden = {{false, false}};
  fa.capacity = {Rational(1, 2), Rational(1, 2)};
  fa.slack = 1;
  return fa;
}

std::vector<Size> loads(const FractionalAssignment& fa, const IntegralAssignment& a) {
  std::vector<Size> out(fa.bins(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] += fa.size[i][a[i]];
  return out;
}

TEST(LstRound, SplitItemLandsInOneBin) {
  const FractionalAssignment fa = two_bin_split();
  const IntegralAssignment a = lst_round(fa);
  ASSERT_EQ(a.size(), 1U);
  const auto l = loads(fa, a);
  EXPECT_EQ(l[a[0]], 1);
  EXPECT_LE(l[a[0]], fa.capacity[a[0]] + fa.slack);
}

TEST(LstRound, IntegralInputIsUnchanged) {
  FractionalAssignment fa;
  fa.x = {{0, 1, 0}, {1, 0, 0}, {0, 1, 0}};
  fa.size = {{2, 2, 2}, {1, 1, 1}, {3, 3, 3}};
  fa.forbidden = {{false, false, false}, {false, false, false}, {false, false, true}};
  fa.capacity = {1, 5, 0};
  fa.slack = 3;
  EXPECT_EQ(lst_round(fa), IntegralAssignment({1, 0, 1}));
}

TEST(LstRound, RejectsViolatedPreconditions) {
  FractionalAssignment over = two_bin_split();
  over.capacity = {Rational(1, 4), Rational(1, 2)};
  EXPECT_FALSE(over.violations().empty());
  EXPECT_THROW(lst_round(over), PreconditionError);
  FractionalAssignment forbidden = two_bin_split();
  forbidden.forbidden[0][1] = true;
  EXPECT_THROW(lst_round(forbidden), PreconditionError);
  FractionalAssignment too_big = two_bin_split();
  too_big.slack = Rational(1, 2);
  EXPECT_THROW(lst_round(too_big), PreconditionError);
}

TEST(LstRound, LoadBoundAndSupportOnRandomLps) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    const FractionalAssignment fa = testing::random_assignment_lp(rng);
    ASSERT_TRUE(fa.violations().empty()) << fa.violations().front();
    const IntegralAssignment a = lst_round(fa);
    ASSERT_EQ(a.size(), fa.items());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_LT(a[i], fa.bins());
      EXPECT_GT(fa.x[i][a[i]], 0) << trial;
    }
    const auto l = loads(fa, a);
    for (std::size_t j = 0; j < fa.bins(); ++j) EXPECT_LE(l[j], fa.capacity[j] + fa.slack) << trial;
  }
}

struct NiceCase {
  RoundedInstance ri;
  Instance prime;
};

NiceCase loosened(const Instance& inst, const Epsilon& eps) {
  RoundedInstance ri = round_instance(inst, eps);
  ri.k = std::max<std::size_t>(ri.k, ri.items.size());
  return {ri, ri.instance()};
}

void expect_nice(const Packing& in, const Packing& out, const NiceCase& c) {
  const auto report = verify_packing(c.prime, out);
  ASSERT_TRUE(report.feasible) << report.violations.front();
  const Rational grid = c.ri.eps.squared();
  for (BinId b = 0; b < in.bins(); ++b) {
    EXPECT_LE(out.load(b), in.load(b) + grid);
    EXPECT_LE(out.bin(b).size(), in.bin(b).size());
    for (const auto& p : out.bin(b)) {
      if (c.ri.items[p.item] >= c.ri.eps.value()) {
        EXPECT_EQ(Rational(p.size / grid).get_den(), 1) << to_string(p.size);
      } else {
        EXPECT_EQ(p.size, in.part(b, p.item));
      }
    }
  }
}

TEST(NicePacking, RecutsAHalfItem) {
  const NiceCase c = loosened(Instance({Rational(1, 2)}, 2, 1), Epsilon(10));
  for (auto first : {Rational(23, 100), Rational(235, 1000)}) {
    Packing pack(2);
    pack.add(0, 0, first);
    pack.add(1, 0, Rational(1, 2) - first);
    const Packing out = nice_packing(pack, c.ri);
    expect_nice(pack, out, c);
    EXPECT_EQ(out.part(0, 0) + out.part(1, 0), Rational(1, 2));
  }
}

TEST(NicePacking, RejectsInfeasibleInput) {
  const NiceCase c = loosened(Instance({Rational(1, 2)}, 2, 1), Epsilon(10));
  Packing pack(2);
  pack.add(0, 0, Rational(1, 4));
  EXPECT_THROW(nice_packing(pack, c.ri), PreconditionError);
}

TEST(NicePacking, PropertiesOnRandomPackings) {
  testing::Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_instance(rng, {8, 4, 1, 3});
    const Epsilon eps(testing::uniform_int(rng, 2, 5));
    const Size g = testing::uniform_rational(rng, Rational(1, 4), 3, 8);
    const NiceCase c = loosened(scale_instance(inst, g), eps);
    const Packing pack = testing::random_feasible_packing(rng, c.prime);
    const Packing out = nice_packing(pack, c.ri);
    expect_nice(pack, out, c);
    EXPECT_LE(out.max_load(), pack.max_load() + eps.squared());
  }
}

TEST(BestFit, TwoEqualItemsSplitAcrossBins) {
  const std::vector<Size> sizes = {Rational(3, 10), Rational(3, 10)};
  const std::vector<Size> budgets = {Rational(3, 10), Rational(3, 10)};
  const std::vector<std::vector<Rational>> x = {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
  const IntegralAssignment a = best_fit_integralize(sizes, budgets, {1, 1}, x);
  EXPECT_EQ(a, IntegralAssignment({0, 1}));
}

TEST(BestFit, IntegralInputIsKept) {
  // Greedy alone would move the first item to the roomier bin 1.
  const std::vector<Size> sizes = {Rational(1, 10), Rational(2, 10), Rational(1, 20)};
  const std::vector<Size> budgets = {Rational(1, 10), 1, 0};
  const std::vector<std::vector<Rational>> x = {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}};
  EXPECT_EQ(best_fit_integralize(sizes, budgets, {1, 2, 0}, x), IntegralAssignment({0, 1, 1}));
}

TEST(BestFit, RejectsInfeasibleFractionalInput) {
  const std::vector<Size> sizes = {Rational(3, 10), Rational(3, 10)};
  const std::vector<std::vector<Rational>> x = {{1, 0}, {1, 0}};
  EXPECT_THROW(best_fit_integralize(sizes, {Rational(6, 10), 0}, {1, 1}, x), PreconditionError);
  EXPECT_THROW(best_fit_integralize(sizes, {Rational(1, 2), 1}, {2, 1}, x), PreconditionError);
  EXPECT_THROW(best_fit_integralize(sizes, {1, 1}, {2, 1}, {{Rational(1, 2), 0}, {1, 0}}), PreconditionError);
}

TEST(BestFit, ContractOnRandomInputs) {
  testing::Rng rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto in = testing::random_best_fit_input(rng, Rational(1, 10));
    const IntegralAssignment a = best_fit_integralize(in.sizes, in.budgets, in.slots, in.x);
    ASSERT_EQ(a.size(), in.sizes.size());
    Size s_max = 0;
    for (const auto& s : in.sizes) s_max = std::max(s_max, s);
    std::vector<Size> load(in.budgets.size(), 0);
    std::vector<std::int64_t> count(in.budgets.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      load[a[i]] += in.sizes[i];
      ++count[a[i]];
    }
    for (std::size_t b = 0; b < load.size(); ++b) {
      EXPECT_LE(load[b], in.budgets[b] + s_max) << trial;
      EXPECT_LE(count[b], in.slots[b]) << trial;
    }
  }
}

}  // namespace
}  // namespace dsbp
