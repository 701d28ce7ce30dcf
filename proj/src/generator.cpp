#include "dsbp/generator.hpp"

#include <limits>
#include <random>
#include <vector>

#include "dsbp/errors.hpp"

namespace dsbp {

const char* to_string(SizeDistribution dist) {
  switch (dist) {
    case SizeDistribution::Uniform:
      return "uniform";
    case SizeDistribution::Bimodal:
      return "bimodal";
    case SizeDistribution::IntegerGrid:
      return "grid";
  }
  return "?";
}

SizeDistribution parse_distribution(const std::string& name) {
  if (name == "uniform") return SizeDistribution::Uniform;
  if (name == "bimodal") return SizeDistribution::Bimodal;
  if (name == "grid") return SizeDistribution::IntegerGrid;
  throw FormatError("unknown distribution '" + name + "' (expected uniform, bimodal or grid)");
}

namespace {

constexpr long kGrid = 1'000'000;

// std::uniform_int_distribution is implementation-defined; this is not.
std::uint64_t below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t draw = engine();
    if (draw >= threshold) return draw % bound;
  }
}

std::int64_t between(std::mt19937_64& engine, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(engine, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace

Instance generate(const GenSpec& spec) {
  if (spec.m < 1 || spec.k < 1) throw PreconditionError("bins and k must be at least 1");
  if (spec.feasible && spec.n > spec.k * spec.m) {
    throw PreconditionError("n = " + std::to_string(spec.n) + " exceeds k * m = " + std::to_string(spec.k * spec.m));
  }
  if (spec.lo < 0 || spec.hi < spec.lo) throw PreconditionError("need 0 <= lo <= hi");

  std::mt19937_64 engine(spec.seed);
  std::vector<Size> items;
  items.reserve(spec.n);

  if (spec.dist == SizeDistribution::IntegerGrid) {
    if (spec.step <= 0) throw PreconditionError("grid step must be positive");
    const std::int64_t first = to_int64(ceil_of(spec.lo / spec.step));
    const std::int64_t last = to_int64(floor_of(spec.hi / spec.step));
    if (first > last) throw PreconditionError("no multiple of the step lies in [lo, hi]");
    for (std::size_t i = 0; i < spec.n; ++i) items.push_back(spec.step * Rational(between(engine, first, last)));
    return Instance(std::move(items), spec.m, spec.k);
  }

  const std::int64_t lo = to_int64(ceil_of(spec.lo * kGrid));
  const std::int64_t hi = to_int64(floor_of(spec.hi * kGrid));
  if (lo > hi) throw PreconditionError("no grid point lies in [lo, hi]");
  const std::int64_t band = (hi - lo) / 10;
  const std::int64_t small_cut = to_int64(floor_of(spec.small_fraction * kGrid));
  for (std::size_t i = 0; i < spec.n; ++i) {
    std::int64_t units = 0;
    if (spec.dist == SizeDistribution::Uniform) {
      units = between(engine, lo, hi);
    } else if (between(engine, 0, kGrid - 1) < small_cut) {
      units = between(engine, lo, lo + band);
    } else {
      units = between(engine, hi - band, hi);
    }
    items.push_back(Rational(units, kGrid));
  }
  return Instance(std::move(items), spec.m, spec.k);
}

}  // namespace dsbp
