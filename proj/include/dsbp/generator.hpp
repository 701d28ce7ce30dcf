#pragma once

// Seeded random instances. Sizes lie on the 1/10^6 grid (or on the given
// step for the integer grid) and the same spec always gives the same
// instance, on every platform.

#include <cstdint>
#include <string>

#include "dsbp/instance.hpp"

namespace dsbp {

enum class SizeDistribution { Uniform, Bimodal, IntegerGrid };

const char* to_string(SizeDistribution dist);
SizeDistribution parse_distribution(const std::string& name);

struct GenSpec {
  std::size_t n = 10;
  std::size_t m = 2;
  std::size_t k = 2;
  SizeDistribution dist = SizeDistribution::Uniform;
  Size lo = 0;
  Size hi = 1;
  /// Bimodal: probability of a small item, as a fraction.
  Size small_fraction = Rational(1, 2);
  /// Integer grid: sizes are multiples of step in [lo, hi].
  Size step = Rational(1, 4);
  std::uint64_t seed = 1;
  /// Reject specs with n > k m.
  bool feasible = true;
};

/// Throws PreconditionError for an invalid spec.
Instance generate(const GenSpec& spec);

}  // namespace dsbp
