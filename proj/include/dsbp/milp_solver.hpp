#pragma once

// Feasibility solvers for the configuration MILP.
//
// Two exact strategies share one contract: a returned solution satisfies
// every row of the model with exact arithmetic, "infeasible" is a proof, and
// running out of nodes yields "unknown".
//
//  - LpBranchAndBound materializes every configuration and pattern and runs
//    branch-and-bound on the LP relaxation (most fractional variable, floor
//    branch first, y_c <= m and z_p <= |items of size alpha_p|).
//  - Decomposed searches per-bin integer amounts a[i][b] of each large item
//    directly. A bin with load and part count (load_b, deg_b) stands for the
//    configuration (gamma = R - load_b, delta from its parts), and the small
//    items must then fit the LP with budgets (gamma + 1) eps^2 and k - deg_b
//    slots per bin. The result is translated back into (x, y, z).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsbp/milp_model.hpp"
#include "dsbp/simplex.hpp"

namespace dsbp {

enum class SolveStatus { Feasible, Infeasible, Unknown };
enum class SolverStrategy { Decomposed, LpBranchAndBound };

const char* to_string(SolveStatus status);
const char* to_string(SolverStrategy strategy);
SolverStrategy parse_strategy(const std::string& name);

struct SolveOptions {
  SolverStrategy strategy = SolverStrategy::Decomposed;
  std::uint64_t node_limit = 2'000'000;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<MilpSolution> solution;
  std::uint64_t nodes = 0;
  std::uint64_t lp_solves = 0;
  std::string note;
};

SolveOutcome solve_milp(const MilpModel& model, const SolveOptions& options = {});

struct IntegerVariable {
  std::size_t var;
  std::int64_t upper;
};

struct BranchAndBoundResult {
  SolveStatus status = SolveStatus::Unknown;
  std::vector<Rational> values;
  std::uint64_t nodes = 0;
  std::uint64_t lp_solves = 0;
};

/// Depth-first branch-and-bound for a feasibility problem: the listed
/// variables must be integers in [0, upper].
BranchAndBoundResult branch_and_bound(const LinearProgram& lp,
                                      const std::vector<IntegerVariable>& integers,
                                      std::uint64_t node_limit);

/// Fractional assignment of items with the given sizes to bins with slot
/// limits `slots` and size budgets `budgets`: x[i][b] >= 0, rows sum to 1,
/// sum_i x[i][b] <= slots[b], sum_i size_i x[i][b] <= budgets[b].
/// Returns nothing when no such assignment exists.
std::optional<std::vector<std::vector<Rational>>> fractional_small_assignment(
    const std::vector<Size>& sizes, const std::vector<std::int64_t>& slots,
    const std::vector<Size>& budgets);

}  // namespace dsbp
