#pragma once

// Exact arithmetic used throughout the solver. Every size, load and LP
// coefficient is an arbitrary-precision rational kept in lowest terms.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace dsbp {

using Integer = mpz_class;

/// mpq_class whose numerator/denominator constructors reduce to lowest
/// terms; gmpxx leaves those uncanonicalized, which breaks comparisons.
class Rational : public mpq_class {
 public:
  using mpq_class::mpq_class;
  Rational() = default;
  Rational(const mpq_class& q) : mpq_class(q) {}
  Rational(mpq_class&& q) : mpq_class(std::move(q)) {}
  template <class N, class D>
    requires(std::is_integral_v<N> && std::is_integral_v<D>)
  Rational(N num, D den) : mpq_class(Integer(num), Integer(den)) {
    canonicalize();
  }
  Rational(const Integer& num, const Integer& den) : mpq_class(num, den) { canonicalize(); }
};

/// Item sizes are non-negative rationals; the alias documents intent.
using Size = Rational;

/// Parses "3", "3/2", "0.137", "-1.5", "1e-3" exactly. Throws FormatError.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal approximation for human-facing reports only.
std::string to_decimal(const Rational& value, int digits = 6);
double to_double(const Rational& value);

Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);
bool is_integer(const Rational& value);

/// base^exponent for any integer exponent (base must be non-zero if exponent < 0).
Rational power(const Rational& base, std::int64_t exponent);

/// Converts an integral rational that fits into int64; throws otherwise.
std::int64_t to_int64(const Rational& value);
std::int64_t to_int64(const Integer& value);

}  // namespace dsbp
