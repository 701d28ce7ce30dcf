#pragma once

// The configuration MILP over a rounded instance.
//
// Variables: x[i][c] >= 0 (share of small item i placed in bins of
// configuration c), y[c] in Z+ (bins using configuration c), z[p] in Z+
// (large items cut by pattern p). The part counters v[r] are eliminated by
// equating the two ways of counting parts of size r; v is recomputed from z.
//
// Rows:
//   bins       sum_c y[c] = m
//   small(i)   sum_c x[i][c] = 1
//   parts(r)   sum_c delta[c][r] y[c] - sum_p beta[p][r] z[p] = 0
//   items(l)   sum_{p : alpha_p = l} z[p] = |items of size l|
//   card(c)    sum_i x[i][c] <= y[c] (k - parts(c))
//   mass(c)    sum_i S_i x[i][c] <= y[c] (gamma_c + 1) eps^2
//
// Configurations and patterns are held as implicit spaces, and solutions are
// sparse: configurations and patterns not listed have zero counters.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsbp/patterns.hpp"
#include "dsbp/rounding.hpp"

namespace dsbp {

struct LargeClass {
  Size size;
  std::int64_t alpha;  ///< size / eps^2
  std::vector<ItemId> items;
};

struct ConfigurationUse {
  Configuration config;
  std::int64_t count = 0;               ///< y[c]
  std::vector<Rational> small_share;    ///< x[i][c], indexed like MilpModel::small_items
};

struct PatternUse {
  Pattern pattern;
  std::int64_t count = 0;  ///< z[p]
};

struct MilpSolution {
  std::vector<ConfigurationUse> configurations;
  std::vector<PatternUse> patterns;
  std::vector<std::int64_t> parts;  ///< v[r-1] = sum_p beta[p][r] z[p]

  /// Recomputes `parts` from the pattern counters.
  void derive_parts(std::int64_t max_part);
};

class MilpModel {
 public:
  MilpModel(const Epsilon& eps, Size cap, std::size_t bins, std::size_t k,
            std::vector<ItemId> small_items, std::vector<Size> small_sizes,
            std::vector<LargeClass> large_classes);

  const Epsilon& eps() const { return eps_; }
  const Size& cap() const { return cap_; }
  std::int64_t units() const { return units_; }  ///< R = cap / eps^2
  std::size_t bins() const { return bins_; }
  std::size_t k() const { return k_; }
  const std::vector<ItemId>& small_items() const { return small_items_; }
  const std::vector<Size>& small_sizes() const { return small_sizes_; }
  const std::vector<LargeClass>& large_classes() const { return large_classes_; }
  std::size_t large_item_count() const;

  const ConfigurationSpace& configurations() const { return configurations_; }
  /// Pattern space for large class `index`.
  PatternSpace patterns(std::size_t index) const;
  /// Index of the large class with the given alpha, or npos.
  std::size_t class_of_alpha(std::int64_t alpha) const;

  Integer configuration_count() const;
  Integer pattern_count() const;
  /// |S| |C| + |C| + |P|
  Integer variable_count() const;
  /// 1 + |S| + R + |L| + 2 |C|
  Integer constraint_count() const;

  /// Every violated row or malformed entry, checked with exact arithmetic.
  std::vector<std::string> violations(const MilpSolution& sol) const;
  bool satisfied_by(const MilpSolution& sol) const { return violations(sol).empty(); }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Epsilon eps_;
  Size cap_;
  std::int64_t units_;
  std::size_t bins_;
  std::size_t k_;
  std::vector<ItemId> small_items_;
  std::vector<Size> small_sizes_;
  std::vector<LargeClass> large_classes_;
  ConfigurationSpace configurations_;
};

/// Builds the model for a rounded instance. Throws PreconditionError when a
/// large item's size has no class in L or is not a multiple of eps^2.
MilpModel build_model(const RoundedInstance& ri, const Classification& cls);

/// Encodes a nice packing of I' (max load <= cap, every large part a multiple
/// of eps^2) as a MILP solution. Throws PreconditionError if the packing is
/// not nice or not feasible.
MilpSolution packing_to_milp_solution(const Packing& nice, const RoundedInstance& ri,
                                      const MilpModel& model);

/// Writes the model in an LP-like text format (see docs/model_format.md).
/// Materializes every configuration and pattern, so `cap` bounds the output.
void write_model(std::ostream& out, const MilpModel& model,
                 std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace dsbp
