#include "dsbp/instance.hpp"

#include <algorithm>

#include "dsbp/errors.hpp"

namespace dsbp {

Instance::Instance(std::vector<Size> items, std::size_t bins, std::size_t k)
    : items_(std::move(items)), bins_(bins), k_(k), total_(0) {
  if (bins_ == 0) throw PreconditionError("instance needs at least one bin");
  if (k_ == 0) throw PreconditionError("cardinality bound k must be positive");
  for (std::size_t i = 0; i < items_.size(); ++i) {
    items_[i].canonicalize();
    if (items_[i] < 0) {
      throw PreconditionError("item " + std::to_string(i) + " has negative size");
    }
    total_ += items_[i];
  }
}

void Packing::add(BinId b, ItemId item, const Size& size) {
  auto& parts = bins_.at(b);
  auto it = std::lower_bound(parts.begin(), parts.end(), item,
                             [](const Part& p, ItemId id) { return p.item < id; });
  if (it != parts.end() && it->item == item) {
    it->size += size;
  } else {
    parts.insert(it, Part{item, size});
  }
}

void Packing::set_part(BinId b, ItemId item, const Size& size) {
  auto& parts = bins_.at(b);
  auto it = std::lower_bound(parts.begin(), parts.end(), item,
                             [](const Part& p, ItemId id) { return p.item < id; });
  if (it == parts.end() || it->item != item) {
    throw PreconditionError("set_part on a missing part");
  }
  if (size == 0) {
    parts.erase(it);
  } else {
    it->size = size;
  }
}

Size Packing::part(BinId b, ItemId item) const {
  const auto& parts = bins_.at(b);
  auto it = std::lower_bound(parts.begin(), parts.end(), item,
                             [](const Part& p, ItemId id) { return p.item < id; });
  if (it != parts.end() && it->item == item) return it->size;
  return 0;
}

Size Packing::load(BinId b) const {
  Size total = 0;
  for (const auto& p : bins_.at(b)) total += p.size;
  return total;
}

Size Packing::max_load() const {
  Size best = 0;
  for (BinId b = 0; b < bins_.size(); ++b) best = std::max(best, load(b));
  return best;
}

Packing Packing::scaled(const Size& factor) const {
  Packing out = *this;
  for (auto& parts : out.bins_) {
    for (auto& p : parts) p.size *= factor;
  }
  return out;
}

VerificationReport verify_packing(const Instance& inst, const Packing& pack) {
  if (pack.bins() != inst.bins()) {
    throw StructuralError("packing has " + std::to_string(pack.bins()) + " bins, instance has " +
                          std::to_string(inst.bins()));
  }
  VerificationReport report;
  std::vector<Size> packed(inst.size(), Size(0));
  std::vector<std::size_t> entries(inst.size(), 0);

  for (BinId b = 0; b < pack.bins(); ++b) {
    const auto& parts = pack.bin(b);
    for (const auto& p : parts) {
      if (p.item >= inst.size()) {
        throw StructuralError("bin " + std::to_string(b) + " references unknown item " +
                              std::to_string(p.item));
      }
      if (p.size < 0) {
        report.violations.push_back("negative part of item " + std::to_string(p.item) +
                                    " in bin " + std::to_string(b));
      } else if (p.size == 0 && inst.item(p.item) != 0) {
        report.violations.push_back("empty part of item " + std::to_string(p.item) + " in bin " +
                                    std::to_string(b));
      }
      packed[p.item] += p.size;
      ++entries[p.item];
    }
    if (parts.size() > inst.k()) {
      report.violations.push_back("cardinality exceeded at bin " + std::to_string(b) + ": " +
                                  std::to_string(parts.size()) + " parts > k = " +
                                  std::to_string(inst.k()));
    }
  }

  for (ItemId t = 0; t < inst.size(); ++t) {
    if (packed[t] < inst.item(t)) {
      report.violations.push_back("item " + std::to_string(t) + " underpacked: " +
                                  to_string(packed[t]) + " of " + to_string(inst.item(t)));
    } else if (packed[t] > inst.item(t)) {
      report.violations.push_back("item " + std::to_string(t) + " overpacked: " +
                                  to_string(packed[t]) + " of " + to_string(inst.item(t)));
    }
    if (inst.item(t) == 0 && entries[t] != 1) {
      report.violations.push_back("zero-size item " + std::to_string(t) + " must occupy exactly one part, has " +
                                  std::to_string(entries[t]));
    }
  }

  report.max_load = pack.max_load();
  report.feasible = report.violations.empty();
  return report;
}

bool check_feasible(const Instance& inst) { return inst.size() <= inst.k() * inst.bins(); }

Size lower_bound(const Instance& inst) { return inst.total_size() / Size(inst.bins()); }

std::pair<Size, Packing> fractional_opt_no_cardinality(const Instance& inst) {
  const Size target = lower_bound(inst);
  Packing pack(inst.bins());
  BinId b = 0;
  Size room = target;
  for (ItemId t = 0; t < inst.size(); ++t) {
    Size remaining = inst.item(t);
    if (remaining == 0) {
      pack.add(b, t, 0);
      continue;
    }
    while (remaining > 0) {
      // The last bin absorbs everything left; its total is exactly W/m.
      Size take = (b + 1 == inst.bins()) ? remaining : std::min(remaining, room);
      pack.add(b, t, take);
      remaining -= take;
      room -= take;
      if (room <= 0 && b + 1 < inst.bins()) {
        ++b;
        room = target;
      }
    }
  }
  return {target, pack};
}

Packing round_robin_zero_packing(const Instance& inst) {
  Packing pack(inst.bins());
  for (ItemId t = 0; t < inst.size(); ++t) pack.add(t % inst.bins(), t, inst.item(t));
  return pack;
}

}  // namespace dsbp
