#pragma once

// Independent reference implementations and random input builders shared by
// the unit tests and the acceptance runner. Nothing here calls the code it
// is used to check, except where noted.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dsbp/instance.hpp"
#include "dsbp/lp_rounding.hpp"
#include "dsbp/milp_model.hpp"
#include "dsbp/simplex.hpp"

namespace dsbp::testing {

using Rng = std::mt19937_64;

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
/// Uniform on the grid {lo, lo + 1/den, ..., hi}.
Rational uniform_rational(Rng& rng, const Rational& lo, const Rational& hi, std::int64_t den);

// ---------- linear programs ----------

struct LpRange {
  bool feasible = false;
  bool bounded = true;     ///< objective bounded in the optimized direction
  Rational optimum;        ///< valid when feasible && bounded
};

/// Fourier-Motzkin elimination over exact rationals (x >= 0 implied):
/// projects the feasible set onto t = objective and reads off the best t.
LpRange fourier_motzkin(const LinearProgram& lp);

// ---------- enumeration ----------

/// Partitions of alpha into parts <= max_part by plain recursion over
/// non-increasing part sequences, returned as beta vectors.
std::vector<std::vector<std::int64_t>> partitions(std::int64_t alpha, std::int64_t max_part);

/// Configurations by nested loops over every delta_r in [0, budget / r].
std::vector<Configuration> configurations_by_loops(std::int64_t budget, std::int64_t k);

// ---------- MILP ----------

/// Tries every integer (y, z) with sum y = m and the pattern counts per size
/// fixed, then checks the remaining rows with an LP for x. Nothing when the
/// number of integer points exceeds `point_cap`.
std::optional<bool> exhaustive_milp_feasible(const MilpModel& model, std::uint64_t point_cap = 10'000);

/// A random toy model (small R, few items) whose integer box is small.
MilpModel random_toy_model(Rng& rng);

// ---------- instances and packings ----------

struct InstanceShape {
  std::size_t max_n;
  std::size_t max_m;
  std::size_t min_k;
  std::size_t max_k;
};

/// Random feasible instance (n <= k m) with sizes from a mix of
/// distributions, some zero sizes and some repeated sizes.
Instance random_instance(Rng& rng, const InstanceShape& shape);

/// Optimum of the no-split problem when n = k m: every bin holds exactly k
/// whole items. Brute force over assignments.
Size no_split_optimum(const Instance& inst);

/// A random feasible packing of `inst`: every item in 1..3 bins with random
/// part sizes, cardinality respected.
Packing random_feasible_packing(Rng& rng, const Instance& inst);

/// A random instance of the assignment LP with a fractional solution.
FractionalAssignment random_assignment_lp(Rng& rng);

struct BestFitInput {
  std::vector<Size> sizes;
  std::vector<Size> budgets;
  std::vector<std::int64_t> slots;
  std::vector<std::vector<Rational>> x;
};

/// Random fractional small-item assignment that respects its budgets and
/// slots; sizes stay below `limit`.
BestFitInput random_best_fit_input(Rng& rng, const Rational& limit);

}  // namespace dsbp::testing
