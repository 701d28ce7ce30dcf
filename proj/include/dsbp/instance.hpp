#pragma once

// Problem data model: items with exact sizes, a fixed number of bins and the
// per-bin cardinality bound. A Packing assigns parts of items to bins.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dsbp/rational.hpp"

namespace dsbp {

using ItemId = std::size_t;
using BinId = std::size_t;

class Instance {
 public:
  Instance(std::vector<Size> items, std::size_t bins, std::size_t k);

  const std::vector<Size>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  const Size& item(ItemId id) const { return items_.at(id); }
  std::size_t bins() const { return bins_; }
  std::size_t k() const { return k_; }
  /// W, the total size of all items.
  const Size& total_size() const { return total_; }

 private:
  std::vector<Size> items_;
  std::size_t bins_;
  std::size_t k_;
  Size total_;
};

struct Part {
  ItemId item;
  Size size;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Per-bin lists of parts. Parts of one item in one bin are merged on
/// insertion and each bin is kept sorted by item id.
class Packing {
 public:
  Packing() = default;
  explicit Packing(std::size_t bins) : bins_(bins) {}

  std::size_t bins() const { return bins_.size(); }
  const std::vector<Part>& bin(BinId b) const { return bins_.at(b); }
  const std::vector<std::vector<Part>>& all_bins() const { return bins_; }

  /// Adds `size` of `item` to bin `b`, merging with an existing part.
  void add(BinId b, ItemId item, const Size& size);
  /// Replaces the size of an existing part; a zero size removes the entry.
  void set_part(BinId b, ItemId item, const Size& size);
  /// Size of item's part in bin b, zero when absent.
  Size part(BinId b, ItemId item) const;

  Size load(BinId b) const;
  Size max_load() const;

  /// Multiplies every part size by `factor`.
  Packing scaled(const Size& factor) const;

  friend bool operator==(const Packing&, const Packing&) = default;

 private:
  std::vector<std::vector<Part>> bins_;
};

struct VerificationReport {
  bool feasible = false;
  Size max_load;
  std::vector<std::string> violations;
};

/// Exact feasibility check. Throws StructuralError on unknown item ids or a
/// bin count that differs from the instance.
VerificationReport verify_packing(const Instance& inst, const Packing& pack);

/// n <= k * m; zero-size items occupy a slot like any other item.
bool check_feasible(const Instance& inst);

/// W / m, a lower bound on the optimum.
Size lower_bound(const Instance& inst);

/// Sequential fill of every bin to exactly W/m, splitting at boundaries.
/// The cardinality bound is ignored.
std::pair<Size, Packing> fractional_opt_no_cardinality(const Instance& inst);

/// Optimum for W = 0: every item is a single zero part, dealt round-robin.
Packing round_robin_zero_packing(const Instance& inst);

}  // namespace dsbp
