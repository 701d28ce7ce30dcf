#pragma once

// Exact optimum by brute force over supports: for every choice of which
// items may use which bin (at most k per bin, every item somewhere, bins
// unordered), solve "minimize C subject to sum_b f_tb = S_t and
// sum_t f_tb <= C" with the exact simplex and keep the best.
//
// Independent of the approximation scheme: it shares only the simplex.

#include <cstddef>
#include <optional>
#include <utility>

#include "dsbp/instance.hpp"

namespace dsbp {

struct OracleOptions {
  std::size_t max_cells = 20;  ///< refuse when n * m exceeds this
  /// Only supports where every bin lists exactly min(k, n) items. Adding an
  /// item to a support never hurts the LP, so the optimum is unchanged.
  bool maximal_supports_only = true;
};

struct OracleResult {
  Size value;
  Packing packing;
  std::size_t supports = 0;  ///< LPs solved
};

/// Nothing when the instance is infeasible (n > k m). Throws ResourceLimit
/// when n * m exceeds the cap.
std::optional<OracleResult> exact_opt(const Instance& inst, const OracleOptions& options = {});

}  // namespace dsbp
