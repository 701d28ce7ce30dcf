#include "dsbp/rounding.hpp"

#include <algorithm>

#include "dsbp/errors.hpp"

namespace dsbp {

const char* to_string(ItemRole role) {
  switch (role) {
    case ItemRole::Whole:
      return "whole";
    case ItemRole::Chunk:
      return "chunk";
    case ItemRole::Remainder:
      return "remainder";
    case ItemRole::RoundedUp:
      return "rounded-up";
  }
  return "?";
}

std::int64_t RoundedInstance::cap_units() const { return to_int64(cap / eps.squared()); }

namespace {

Size round_up_to_grid(const Size& x, const Epsilon& eps) {
  const Rational grid = eps.squared();
  return Rational(ceil_of(x / grid)) * grid;
}

}  // namespace

RoundedInstance round_instance(const Instance& scaled, const Epsilon& eps) {
  RoundedInstance ri{{}, {}, eps, eps.working_cap(), scaled.bins(), scaled.k(), scaled.size()};
  const Rational chunk = eps.inverse_squared();
  const Rational small_limit = eps.value();

  for (ItemId t = 0; t < scaled.size(); ++t) {
    const Size& x = scaled.item(t);
    if (x > chunk) {
      const Integer pieces = floor_of(x / chunk);
      for (Integer i = 0; i < pieces; ++i) {
        ri.items.push_back(chunk);
        ri.provenance.push_back({t, ItemRole::Chunk, chunk});
      }
      const Size rest = x - Rational(pieces) * chunk;
      // An exact multiple leaves nothing; a zero-size remainder would only
      // waste a cardinality slot.
      if (rest > 0) {
        ri.items.push_back(rest >= small_limit ? round_up_to_grid(rest, eps) : rest);
        ri.provenance.push_back({t, ItemRole::Remainder, rest});
      }
    } else if (x >= small_limit) {
      Size up = round_up_to_grid(x, eps);
      ri.provenance.push_back({t, up == x ? ItemRole::Whole : ItemRole::RoundedUp, x});
      ri.items.push_back(std::move(up));
    } else {
      ri.items.push_back(x);
      ri.provenance.push_back({t, ItemRole::Whole, x});
    }
  }
  return ri;
}

Classification classify(const RoundedInstance& ri) {
  Classification c;
  const Rational small_limit = ri.eps.value();
  for (ItemId i = 0; i < ri.items.size(); ++i) {
    if (ri.items[i] < small_limit) {
      c.small.push_back(i);
    } else {
      c.large.push_back(i);
      c.distinct_large_sizes.push_back(ri.items[i]);
    }
  }
  auto& sizes = c.distinct_large_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return c;
}

Packing lift_packing(const Packing& pack, const RoundedInstance& ri, const Size& g) {
  const Instance rounded = ri.instance();
  const auto report = verify_packing(rounded, pack);
  if (!report.feasible) {
    throw PreconditionError("lift_packing needs a feasible packing of the rounded instance: " +
                            report.violations.front());
  }

  Packing shrunk = pack;
  for (ItemId u = 0; u < ri.items.size(); ++u) {
    Size surplus = ri.items[u] - ri.provenance[u].unrounded;
    while (surplus > 0) {
      BinId best = 0;
      Size best_size = -1;
      for (BinId b = 0; b < shrunk.bins(); ++b) {
        Size s = shrunk.part(b, u);
        if (s > best_size) {
          best = b;
          best_size = s;
        }
      }
      if (best_size <= 0) throw InternalError("rounded item has no part left to shrink");
      const Size take = std::min(surplus, best_size);
      shrunk.set_part(best, u, best_size - take);
      surplus -= take;
    }
  }

  Packing lifted(pack.bins());
  for (BinId b = 0; b < shrunk.bins(); ++b) {
    for (const auto& p : shrunk.bin(b)) lifted.add(b, ri.provenance[p.item].original, p.size);
  }
  return lifted.scaled(g);
}

}  // namespace dsbp
