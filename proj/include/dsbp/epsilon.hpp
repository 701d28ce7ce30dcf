#pragma once

#include <cstdint>

#include "dsbp/rational.hpp"

namespace dsbp {

/// Accuracy parameter eps = 1/E for an integer E >= 2.
///
/// The counting bounds on patterns and configurations are only claimed for
/// E >= 10 ("strict" mode). Smaller E is accepted so the scheme can actually
/// be run; callers should warn the user when strict() is false.
class Epsilon {
 public:
  explicit Epsilon(std::int64_t denominator);

  std::int64_t denominator() const { return denominator_; }
  Rational value() const { return Rational(1, denominator_); }
  Rational squared() const { return Rational(1, denominator_ * denominator_); }
  /// 1/eps^2 as an integer.
  std::int64_t inverse_squared() const { return denominator_ * denominator_; }
  bool strict() const { return denominator_ >= 10; }

  /// cap = 1 + 4 eps, the working bin bound after the nice-packing step.
  Rational working_cap() const { return 1 + 4 * value(); }

  /// (1 + eps)(1 + 4 eps)(1 + 2 eps), the end-to-end approximation factor.
  Rational guarantee() const;

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  std::int64_t denominator_;
};

}  // namespace dsbp
