#include "dsbp/patterns.hpp"

#include <algorithm>
#include <numeric>

#include "dsbp/errors.hpp"

namespace dsbp {

std::int64_t Pattern::parts() const { return std::accumulate(beta.begin(), beta.end(), std::int64_t{0}); }

bool Pattern::feasible() const {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < beta.size(); ++r) {
    if (beta[r] < 0) return false;
    sum += static_cast<std::int64_t>(r + 1) * beta[r];
  }
  return sum == alpha;
}

Pattern Pattern::from_parts(const std::vector<std::int64_t>& parts, std::int64_t max_part) {
  Pattern p;
  p.beta.assign(static_cast<std::size_t>(max_part), 0);
  for (auto r : parts) {
    if (r < 1 || r > max_part) throw PreconditionError("part size out of range for a pattern");
    ++p.beta[static_cast<std::size_t>(r - 1)];
    p.alpha += r;
  }
  return p;
}

std::int64_t Configuration::parts() const {
  return std::accumulate(delta.begin(), delta.end(), std::int64_t{0});
}

std::int64_t Configuration::large_units() const {
  std::int64_t sum = 0;
  for (std::size_t r = 0; r < delta.size(); ++r) sum += static_cast<std::int64_t>(r + 1) * delta[r];
  return sum;
}

// ---------- patterns ----------

PatternSpace::PatternSpace(std::int64_t alpha, std::int64_t max_part)
    : alpha_(alpha), max_part_(max_part) {
  if (alpha_ < 0 || max_part_ < 1) throw PreconditionError("bad pattern space");
}

Integer PatternSpace::count() const {
  std::vector<Integer> ways(static_cast<std::size_t>(alpha_ + 1), 0);
  ways[0] = 1;
  for (std::int64_t r = 1; r <= max_part_; ++r) {
    for (std::int64_t a = r; a <= alpha_; ++a) ways[a] += ways[a - r];
  }
  return ways[alpha_];
}

bool PatternSpace::contains(const Pattern& p) const {
  return p.alpha == alpha_ && static_cast<std::int64_t>(p.beta.size()) == max_part_ && p.feasible();
}

void PatternSpace::enumerate(const std::function<bool(const Pattern&)>& visit,
                             std::uint64_t cap) const {
  const auto R = static_cast<std::size_t>(max_part_);
  const auto A = static_cast<std::size_t>(alpha_);
  // reach[r][a]: a can be written with parts in [r+1, R] (0-based r).
  std::vector<std::vector<char>> reach(R + 1, std::vector<char>(A + 1, 0));
  reach[R][0] = 1;
  for (std::size_t r = R; r-- > 0;) {
    const std::size_t size = r + 1;
    for (std::size_t a = 0; a <= A; ++a) {
      reach[r][a] = reach[r + 1][a] || (a >= size && reach[r][a - size]);
    }
  }

  Pattern current;
  current.alpha = alpha_;
  current.beta.assign(R, 0);
  std::uint64_t emitted = 0;
  bool stop = false;

  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t r, std::size_t left) {
    if (stop) return;
    if (r == R) {
      if (left != 0) return;
      if (++emitted > cap) {
        throw ResourceLimit("pattern enumeration exceeded cap of " + std::to_string(cap));
      }
      if (!visit(current)) stop = true;
      return;
    }
    const std::size_t size = r + 1;
    for (std::size_t count = 0; count * size <= left && !stop; ++count) {
      if (!reach[r + 1][left - count * size]) continue;
      current.beta[r] = static_cast<std::int64_t>(count);
      recurse(r + 1, left - count * size);
    }
    current.beta[r] = 0;
  };
  recurse(0, A);
}

std::vector<Pattern> PatternSpace::materialize(std::uint64_t cap) const {
  std::vector<Pattern> out;
  enumerate([&](const Pattern& p) {
    out.push_back(p);
    return true;
  }, cap);
  return out;
}

// ---------- configurations ----------

ConfigurationSpace::ConfigurationSpace(std::int64_t budget, std::int64_t k) : budget_(budget), k_(k) {
  if (budget_ < 0 || k_ < 0) throw PreconditionError("bad configuration space");
}

Integer ConfigurationSpace::count() const {
  const auto R = static_cast<std::size_t>(budget_);
  const auto K = static_cast<std::size_t>(std::min(k_, budget_));
  // multisets[j][s]: multisets of j parts from [1, R] summing to s.
  std::vector<std::vector<Integer>> multisets(K + 1, std::vector<Integer>(R + 1, 0));
  multisets[0][0] = 1;
  for (std::size_t r = 1; r <= R; ++r) {
    for (std::size_t j = 1; j <= K; ++j) {
      for (std::size_t s = r; s <= R; ++s) multisets[j][s] += multisets[j - 1][s - r];
    }
  }
  Integer total = 0;
  for (std::size_t s = 0; s <= R; ++s) {
    Integer with_sum = 0;
    for (std::size_t j = 0; j <= K; ++j) with_sum += multisets[j][s];
    total += with_sum * static_cast<unsigned long>(R - s + 1);
  }
  return total;
}

bool ConfigurationSpace::contains(const Configuration& c) const {
  if (static_cast<std::int64_t>(c.delta.size()) != budget_ || c.gamma < 0) return false;
  for (auto d : c.delta) {
    if (d < 0) return false;
  }
  return c.units() <= budget_ && c.parts() <= k_;
}

void ConfigurationSpace::enumerate(const std::function<bool(const Configuration&)>& visit,
                                   std::uint64_t cap) const {
  const auto R = static_cast<std::size_t>(budget_);
  Configuration current;
  current.delta.assign(R, 0);
  std::uint64_t emitted = 0;
  bool stop = false;

  std::function<void(std::size_t, std::int64_t, std::int64_t)> recurse =
      [&](std::size_t r, std::int64_t room, std::int64_t parts_left) {
        if (stop) return;
        const auto size = static_cast<std::int64_t>(r + 1);
        if (r == R || size > room || parts_left == 0) {
          // Remaining coordinates are forced to zero.
          if (++emitted > cap) {
            throw ResourceLimit("configuration enumeration exceeded cap of " + std::to_string(cap));
          }
          if (!visit(current)) stop = true;
          return;
        }
        for (std::int64_t count = 0; count * size <= room && count <= parts_left && !stop; ++count) {
          current.delta[r] = count;
          recurse(r + 1, room - count * size, parts_left - count);
        }
        current.delta[r] = 0;
      };

  for (std::int64_t gamma = 0; gamma <= budget_ && !stop; ++gamma) {
    current.gamma = gamma;
    recurse(0, budget_ - gamma, k_);
  }
}

std::vector<Configuration> ConfigurationSpace::materialize(std::uint64_t cap) const {
  std::vector<Configuration> out;
  enumerate([&](const Configuration& c) {
    out.push_back(c);
    return true;
  }, cap);
  return out;
}

// ---------- free functions ----------

namespace {

std::int64_t units_of(const Size& size, const Epsilon& eps, const char* what) {
  const Rational units = size / eps.squared();
  if (!is_integer(units)) {
    throw PreconditionError(std::string(what) + " " + to_string(size) +
                            " is not an integer multiple of eps^2");
  }
  return to_int64(units);
}

}  // namespace

std::map<Size, std::vector<Pattern>> enumerate_patterns(const std::vector<Size>& large_sizes,
                                                        const Epsilon& eps, const Size& cap,
                                                        std::uint64_t limit) {
  const std::int64_t max_part = units_of(cap, eps, "cap");
  std::map<Size, std::vector<Pattern>> out;
  std::uint64_t used = 0;
  for (const auto& size : large_sizes) {
    const std::int64_t alpha = units_of(size, eps, "large size");
    if (alpha <= 0) throw PreconditionError("large sizes must be positive");
    auto list = PatternSpace(alpha, max_part).materialize(limit - used);
    used += list.size();
    out.emplace(size, std::move(list));
  }
  return out;
}

std::vector<Configuration> enumerate_configurations(const Epsilon& eps, const Size& cap,
                                                    std::int64_t k, std::uint64_t limit) {
  return ConfigurationSpace(units_of(cap, eps, "cap"), k).materialize(limit);
}

Size PartialPacking::total() const {
  Size sum = virtual_item;
  for (const auto& p : parts) sum += p;
  return sum;
}

PartialPacking partial_packing(const Configuration& c, const Epsilon& eps) {
  PartialPacking out;
  out.virtual_item = Rational(c.gamma) * eps.squared();
  for (std::size_t r = 0; r < c.delta.size(); ++r) {
    for (std::int64_t i = 0; i < c.delta[r]; ++i) {
      out.parts.push_back(Rational(static_cast<long>(r + 1)) * eps.squared());
    }
  }
  return out;
}

Integer pattern_count_bound(const Epsilon& eps) {
  const Integer e(static_cast<long>(eps.denominator()));
  Integer base = e * e * e * e + 1;
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * eps.inverse_squared()));
  return out;
}

Integer configuration_count_bound(const Epsilon& eps) {
  Integer base(static_cast<long>(2 * eps.inverse_squared()));
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * eps.inverse_squared()));
  return out;
}

Integer total_pattern_count(const Epsilon& eps, const Size& cap) {
  const std::int64_t max_part = units_of(cap, eps, "cap");
  const auto top = static_cast<std::size_t>(eps.inverse_squared() * eps.inverse_squared());
  std::vector<Integer> ways(top + 1, 0);
  ways[0] = 1;
  for (std::int64_t r = 1; r <= max_part; ++r) {
    for (std::size_t a = static_cast<std::size_t>(r); a <= top; ++a) ways[a] += ways[a - r];
  }
  Integer total = 0;
  for (std::size_t a = 1; a <= top; ++a) total += ways[a];
  return total;
}

}  // namespace dsbp
