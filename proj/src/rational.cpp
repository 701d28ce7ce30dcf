#include "dsbp/rational.hpp"

#include <cctype>
#include <limits>

#include "dsbp/errors.hpp"

namespace dsbp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) {
    throw FormatError("not a number: '" + std::string(whole) + "'");
  }
  return Integer(std::string(s));
}

Integer pow10(unsigned long exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw FormatError("empty number");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw FormatError("zero denominator: '" + std::string(text) + "'");
    result = Rational(num, den);
  } else {
    std::int64_t exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) {
        throw FormatError("bad exponent: '" + std::string(text) + "'");
      }
      exponent = std::stoll(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw FormatError("not a number: '" + std::string(text) + "'");
    }
    Integer digits = 0;
    if (!int_part.empty()) digits = parse_integer(int_part, text);
    if (!frac_part.empty()) {
      digits = digits * pow10(frac_part.size()) + parse_integer(frac_part, text);
    }
    exponent -= static_cast<std::int64_t>(frac_part.size());
    if (exponent >= 0) {
      result = Rational(digits * pow10(static_cast<unsigned long>(exponent)));
    } else {
      result = Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = pow10(static_cast<unsigned long>(digits));
  Rational scaled = abs(value) * scale;
  Integer rounded = floor_of(scaled + Rational(1, 2));
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string frac_text = frac.get_str();
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  std::string out = (value < 0 && rounded != 0 ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + frac_text;
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

Integer floor_of(const Rational& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& value) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational power(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw PreconditionError("zero to a negative power");
    return power(1 / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw InternalError("integer out of range: " + value.get_str());
  return value.get_si();
}

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) throw InternalError("not an integer: " + to_string(value));
  return to_int64(value.get_num());
}

}  // namespace dsbp
