#pragma once

#include <cstdint>
#include <vector>

#include "dsbp/epsilon.hpp"
#include "dsbp/instance.hpp"

namespace dsbp {

struct Guess {
  std::int64_t exponent;  ///< g = (1 + eps)^exponent
  Size value;
};

/// Ascending powers of (1 + eps) from the smallest g >= W/m to the smallest
/// g >= W, so every optimum in [W/m, W] lies in (g/(1+eps), g] for one of
/// them. Throws PreconditionError when W = 0 (degenerate instance).
std::vector<Guess> guess_values(const Instance& inst, const Epsilon& eps);

/// Smallest integer j with (1 + eps)^j >= target (target > 0).
std::int64_t ceil_log(const Rational& target, const Epsilon& eps);

/// Divides every item size by g.
Instance scale_instance(const Instance& inst, const Size& g);

}  // namespace dsbp
