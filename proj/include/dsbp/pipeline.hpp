#pragma once

// The approximation scheme end to end: for each guess g in ascending order,
// scale, round, classify, build and solve the configuration MILP; at the
// first feasible guess, turn the MILP solution into a packing of I', lift it
// back to the input and return it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsbp/epsilon.hpp"
#include "dsbp/instance.hpp"
#include "dsbp/milp_solver.hpp"
#include "dsbp/rounding.hpp"

namespace dsbp {

struct ConversionStats {
  std::vector<Size> load_before_best_fit;  ///< large parts plus fractional small mass
  std::vector<Size> load_after_best_fit;
  Size max_load;  ///< of the I' packing, bounded by cap + eps^2 + eps
};

struct ConvertedPacking {
  Packing packing;  ///< packing of I'
  ConversionStats stats;
};

/// Builds a packing of I' from a feasible MILP solution. Patterns go to
/// items of their size (lowest id first), configurations to bins (lowest
/// index first), parts fill configuration slots in increasing size, and the
/// small items are placed by best fit. Throws InternalError when the solution
/// is inconsistent or the result breaks its load bound.
ConvertedPacking milp_to_packing(const MilpSolution& sol, const RoundedInstance& ri,
                                 const MilpModel& model);

struct GuessRecord {
  std::int64_t exponent = 0;
  Size guess;
  std::size_t small_items = 0;
  std::size_t large_items = 0;
  std::size_t distinct_large_sizes = 0;
  std::int64_t max_part = 0;  ///< R = cap / eps^2
  Integer configurations;
  Integer patterns;
  Integer variables;
  Integer constraints;
  SolveStatus status = SolveStatus::Unknown;
  std::uint64_t nodes = 0;
  std::uint64_t lp_solves = 0;
  double seconds = 0;
  std::string note;
  bool selected = false;
  std::optional<ConversionStats> conversion;
  std::optional<Size> value;  ///< max load of the lifted packing
};

struct PipelineTrace {
  std::int64_t eps_denominator = 0;
  Size lower_bound;
  std::vector<GuessRecord> guesses;
  std::string note;

  const GuessRecord* selected() const;
  nlohmann::json to_json() const;
};

struct EptasResult {
  Size value;
  Packing packing;
  PipelineTrace trace;
};

/// Throws InfeasibleInstance when n > k m and ResourceLimit when no guess
/// could be decided within the solver limits.
EptasResult eptas_solve(const Instance& inst, const Epsilon& eps, const SolveOptions& options = {});

}  // namespace dsbp
