#pragma once

// Patterns and configurations, all measured in units of eps^2.
//
// A pattern describes how one large item of size alpha is cut: beta[r-1]
// parts of size r, with sum_r r * beta[r-1] == alpha and r in [1, R] where
// R = cap / eps^2.
//
// A configuration describes one bin: a virtual item of size gamma standing in
// for the small items, and delta[r-1] large-item parts of size r, with
// gamma + sum_r r * delta[r-1] <= R and at most k parts.
//
// Both families are far too large to materialize for realistic eps, so the
// spaces are implicit: counted by dynamic programming and enumerated lazily
// in lexicographic order under an explicit cap.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "dsbp/epsilon.hpp"
#include "dsbp/rational.hpp"

namespace dsbp {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

struct Pattern {
  std::int64_t alpha = 0;
  std::vector<std::int64_t> beta;  ///< beta[r-1] parts of size r

  std::int64_t parts() const;
  bool feasible() const;  ///< alpha == sum r * beta[r-1]

  /// Builds a pattern from a multiset of part sizes.
  static Pattern from_parts(const std::vector<std::int64_t>& parts, std::int64_t max_part);

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) { return a.beta <=> b.beta; }
};

struct Configuration {
  std::int64_t gamma = 0;
  std::vector<std::int64_t> delta;  ///< delta[r-1] parts of size r

  std::int64_t parts() const;
  std::int64_t large_units() const;  ///< sum r * delta[r-1]
  std::int64_t units() const { return gamma + large_units(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
  friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

/// All partitions of alpha into parts of size at most max_part.
class PatternSpace {
 public:
  PatternSpace(std::int64_t alpha, std::int64_t max_part);

  std::int64_t alpha() const { return alpha_; }
  std::int64_t max_part() const { return max_part_; }
  Integer count() const;
  bool contains(const Pattern& p) const;

  /// Visits patterns in ascending lexicographic order of beta. Throws
  /// ResourceLimit once more than `cap` patterns would be emitted. The
  /// visitor may return false to stop early.
  void enumerate(const std::function<bool(const Pattern&)>& visit,
                 std::uint64_t cap = kDefaultEnumerationCap) const;
  std::vector<Pattern> materialize(std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  std::int64_t alpha_;
  std::int64_t max_part_;
};

/// All (gamma, delta) with gamma + sum r delta_r <= budget and sum delta <= k.
class ConfigurationSpace {
 public:
  ConfigurationSpace(std::int64_t budget, std::int64_t k);

  std::int64_t budget() const { return budget_; }
  std::int64_t k() const { return k_; }
  Integer count() const;
  bool contains(const Configuration& c) const;

  /// Ascending lexicographic order on (gamma, delta_1, ..., delta_R).
  void enumerate(const std::function<bool(const Configuration&)>& visit,
                 std::uint64_t cap = kDefaultEnumerationCap) const;
  std::vector<Configuration> materialize(std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  std::int64_t budget_;
  std::int64_t k_;
};

/// Patterns for every large size in L. Each size must be a positive integer
/// multiple of eps^2 (PreconditionError otherwise).
std::map<Size, std::vector<Pattern>> enumerate_patterns(const std::vector<Size>& large_sizes,
                                                        const Epsilon& eps, const Size& cap,
                                                        std::uint64_t limit = kDefaultEnumerationCap);

/// Every feasible configuration for the bin bound `cap` (a multiple of eps^2).
std::vector<Configuration> enumerate_configurations(const Epsilon& eps, const Size& cap,
                                                    std::int64_t k,
                                                    std::uint64_t limit = kDefaultEnumerationCap);

struct PartialPacking {
  Size virtual_item;        ///< gamma * eps^2, placeholder for small items
  std::vector<Size> parts;  ///< delta_r parts of size r * eps^2, increasing r
  Size total() const;
};

PartialPacking partial_packing(const Configuration& c, const Epsilon& eps);

/// Closed-form bounds from the counting lemmas; meaningful for E >= 10.
Integer pattern_count_bound(const Epsilon& eps);        ///< (1/eps^4 + 1)^(2/eps^2)
Integer configuration_count_bound(const Epsilon& eps);  ///< (2/eps^2)^(2/eps^2)

/// Number of feasible patterns over every alpha in [1, 1/eps^4] with parts
/// up to cap/eps^2.
Integer total_pattern_count(const Epsilon& eps, const Size& cap);

}  // namespace dsbp
