#pragma once

// Rounding of fractional assignments.
//
//  - lst_round: an assignment LP with per-bin capacities G_j, where items may
//    only use bins with s_ij <= g, is rounded to an integral assignment with
//    load at most G_j + g per bin, using only bins the fractional solution
//    used.
//  - nice_packing: re-cuts every large item so that each of its parts is a
//    multiple of eps^2, at a cost of at most eps^2 per bin.
//  - best_fit_integralize: integral placement of small items given a
//    fractional one that respects per-bin budgets t_b and slot counts c_b;
//    loads may exceed t_b by at most the largest small size.

#include <cstdint>
#include <string>
#include <vector>

#include "dsbp/instance.hpp"
#include "dsbp/rounding.hpp"

namespace dsbp {

struct FractionalAssignment {
  std::vector<std::vector<Rational>> x;   ///< items x bins, rows sum to 1
  std::vector<std::vector<Size>> size;    ///< s_ij, ignored where forbidden
  std::vector<std::vector<bool>> forbidden;
  std::vector<Size> capacity;             ///< G_j
  Size slack;                             ///< g

  std::size_t items() const { return x.size(); }
  std::size_t bins() const { return capacity.size(); }
  /// True when item i may use bin j at all: allowed and s_ij <= g.
  bool usable(std::size_t i, std::size_t j) const;
  /// Every violated condition of the assignment LP.
  std::vector<std::string> violations() const;
};

/// Bin chosen for each item.
using IntegralAssignment = std::vector<std::size_t>;

/// Throws PreconditionError if `fa` violates its LP and InternalError if
/// the result misses its guarantee.
IntegralAssignment lst_round(const FractionalAssignment& fa);

/// Throws PreconditionError if `pack` is infeasible for `ri`.
Packing nice_packing(const Packing& pack, const RoundedInstance& ri);

/// `x` is items x bins. Items go, in non-increasing size order, to the bin
/// with the most remaining room t_b + S_max - load among bins with a free
/// slot (ties to the lowest index). Throws PreconditionError if `x` is not
/// feasible for the budgets and slots, and InternalError if the result
/// exceeds t_b + S_max or c_b anywhere.
IntegralAssignment best_fit_integralize(const std::vector<Size>& sizes,
                                        const std::vector<Size>& budgets,
                                        const std::vector<std::int64_t>& slots,
                                        const std::vector<std::vector<Rational>>& x);

}  // namespace dsbp
