#pragma once

// Rounding of a scaled instance I into I' and the way back.
//
// I' has two properties: no item exceeds 1/eps^2, and every item of size at
// least eps is an integer multiple of eps^2. Items above 1/eps^2 are cut into
// chunks of exactly 1/eps^2 plus a remainder; items in [eps, 1/eps^2] are
// rounded up.

#include <cstdint>
#include <vector>

#include "dsbp/epsilon.hpp"
#include "dsbp/instance.hpp"

namespace dsbp {

enum class ItemRole { Whole, Chunk, Remainder, RoundedUp };

const char* to_string(ItemRole role);

struct Provenance {
  ItemId original;
  ItemRole role;
  /// Size in the scaled instance before any rounding up.
  Size unrounded;
};

struct RoundedInstance {
  std::vector<Size> items;
  std::vector<Provenance> provenance;
  Epsilon eps;
  Size cap;  ///< working bin bound, an integer multiple of eps^2
  std::size_t bins;
  std::size_t k;
  std::size_t original_items;

  Instance instance() const { return Instance(items, bins, k); }
  /// cap / eps^2
  std::int64_t cap_units() const;
};

/// Applies the two rounding rules; cap is set to 1 + 4 eps.
RoundedInstance round_instance(const Instance& scaled, const Epsilon& eps);

struct Classification {
  std::vector<ItemId> small;  ///< sizes < eps
  std::vector<ItemId> large;  ///< sizes in [eps, 1/eps^2]
  std::vector<Size> distinct_large_sizes;  ///< the set L, ascending
};

Classification classify(const RoundedInstance& ri);

/// Turns a feasible packing of I' into a packing of the original instance:
/// rounded-up items give back their surplus from their largest part (ties to
/// the lowest bin), chunks and remainders are relabelled to their source
/// item and merged, and all sizes are multiplied by g.
/// Throws PreconditionError if `pack` is infeasible for I'.
Packing lift_packing(const Packing& pack, const RoundedInstance& ri, const Size& g);

}  // namespace dsbp
