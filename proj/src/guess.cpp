#include "dsbp/guess.hpp"

#include "dsbp/errors.hpp"

namespace dsbp {

Epsilon::Epsilon(std::int64_t denominator) : denominator_(denominator) {
  if (denominator_ < 2) throw PreconditionError("eps = 1/E needs E >= 2");
  if (denominator_ > 1'000'000) throw PreconditionError("E is unreasonably large");
}

Rational Epsilon::guarantee() const {
  const Rational e = value();
  return (1 + e) * (1 + 4 * e) * (1 + 2 * e);
}

std::int64_t ceil_log(const Rational& target, const Epsilon& eps) {
  if (target <= 0) throw PreconditionError("ceil_log needs a positive target");
  const Rational base = 1 + eps.value();
  std::int64_t j = 0;
  Rational g = 1;
  if (g >= target) {
    // Walk down while the next smaller power still reaches the target.
    while (g / base >= target) {
      g /= base;
      --j;
    }
  } else {
    while (g < target) {
      g *= base;
      ++j;
    }
  }
  return j;
}

std::vector<Guess> guess_values(const Instance& inst, const Epsilon& eps) {
  if (inst.total_size() == 0) {
    throw PreconditionError("degenerate instance: W = 0 has no guess interval");
  }
  const Rational base = 1 + eps.value();
  const std::int64_t lo = ceil_log(lower_bound(inst), eps);
  const std::int64_t hi = ceil_log(inst.total_size(), eps);
  std::vector<Guess> out;
  Rational g = power(base, lo);
  for (std::int64_t j = lo; j <= hi; ++j) {
    out.push_back(Guess{j, g});
    g *= base;
  }
  return out;
}

Instance scale_instance(const Instance& inst, const Size& g) {
  if (g <= 0) throw PreconditionError("scale factor must be positive");
  std::vector<Size> items;
  items.reserve(inst.size());
  for (const auto& s : inst.items()) items.push_back(s / g);
  return Instance(std::move(items), inst.bins(), inst.k());
}

}  // namespace dsbp
