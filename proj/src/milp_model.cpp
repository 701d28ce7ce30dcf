#include "dsbp/milp_model.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>

#include "dsbp/errors.hpp"

namespace dsbp {

void MilpSolution::derive_parts(std::int64_t max_part) {
  parts.assign(static_cast<std::size_t>(max_part), 0);
  for (const auto& use : patterns) {
    for (std::size_t r = 0; r < use.pattern.beta.size() && r < parts.size(); ++r) {
      parts[r] += use.pattern.beta[r] * use.count;
    }
  }
}

MilpModel::MilpModel(const Epsilon& eps, Size cap, std::size_t bins, std::size_t k,
                     std::vector<ItemId> small_items, std::vector<Size> small_sizes,
                     std::vector<LargeClass> large_classes)
    : eps_(eps),
      cap_(std::move(cap)),
      units_(0),
      bins_(bins),
      k_(k),
      small_items_(std::move(small_items)),
      small_sizes_(std::move(small_sizes)),
      large_classes_(std::move(large_classes)),
      configurations_(0, 0) {
  const Rational units = cap_ / eps_.squared();
  if (!is_integer(units) || units < 1) {
    throw PreconditionError("cap must be a positive integer multiple of eps^2");
  }
  units_ = to_int64(units);
  configurations_ = ConfigurationSpace(units_, static_cast<std::int64_t>(k_));
  if (small_items_.size() != small_sizes_.size()) {
    throw PreconditionError("small item ids and sizes differ in length");
  }
}

std::size_t MilpModel::large_item_count() const {
  std::size_t n = 0;
  for (const auto& c : large_classes_) n += c.items.size();
  return n;
}

PatternSpace MilpModel::patterns(std::size_t index) const {
  return PatternSpace(large_classes_.at(index).alpha, units_);
}

std::size_t MilpModel::class_of_alpha(std::int64_t alpha) const {
  for (std::size_t i = 0; i < large_classes_.size(); ++i) {
    if (large_classes_[i].alpha == alpha) return i;
  }
  return npos;
}

Integer MilpModel::configuration_count() const { return configurations_.count(); }

Integer MilpModel::pattern_count() const {
  Integer total = 0;
  for (std::size_t i = 0; i < large_classes_.size(); ++i) total += patterns(i).count();
  return total;
}

Integer MilpModel::variable_count() const {
  const Integer configs = configuration_count();
  return configs * static_cast<unsigned long>(small_items_.size()) + configs + pattern_count();
}

Integer MilpModel::constraint_count() const {
  return Integer(static_cast<unsigned long>(1 + small_items_.size() + large_classes_.size())) +
         Integer(static_cast<long>(units_)) + 2 * configuration_count();
}

std::vector<std::string> MilpModel::violations(const MilpSolution& sol) const {
  std::vector<std::string> out;
  const auto R = static_cast<std::size_t>(units_);
  const Rational grid = eps_.squared();

  // Configuration counters, bins row, card and mass rows.
  std::set<Configuration> seen_configs;
  std::int64_t bin_total = 0;
  std::vector<Rational> small_total(small_items_.size(), 0);
  std::vector<std::int64_t> slot_count(R, 0);
  for (const auto& use : sol.configurations) {
    if (!configurations_.contains(use.config)) {
      out.push_back("configuration outside the feasible set");
      continue;
    }
    if (!seen_configs.insert(use.config).second) out.push_back("configuration listed twice");
    if (use.count < 0) out.push_back("negative configuration counter");
    if (use.small_share.size() != small_items_.size()) {
      out.push_back("configuration share vector has wrong length");
      continue;
    }
    bin_total += use.count;
    Rational share_sum = 0;
    Rational share_mass = 0;
    for (std::size_t i = 0; i < small_items_.size(); ++i) {
      if (use.small_share[i] < 0) out.push_back("negative small-item share");
      share_sum += use.small_share[i];
      share_mass += use.small_share[i] * small_sizes_[i];
      small_total[i] += use.small_share[i];
    }
    const auto free_slots = static_cast<std::int64_t>(k_) - use.config.parts();
    if (share_sum > Rational(use.count) * Rational(free_slots)) {
      out.push_back("cardinality row violated for a configuration");
    }
    if (share_mass > Rational(use.count) * Rational(use.config.gamma + 1) * grid) {
      out.push_back("small-mass row violated for a configuration");
    }
    for (std::size_t r = 0; r < R; ++r) slot_count[r] += use.config.delta[r] * use.count;
  }
  if (bin_total != static_cast<std::int64_t>(bins_)) {
    out.push_back("bins row: configurations cover " + std::to_string(bin_total) + " bins, need " +
                  std::to_string(bins_));
  }
  for (std::size_t i = 0; i < small_items_.size(); ++i) {
    if (small_total[i] != 1) {
      out.push_back("small item " + std::to_string(small_items_[i]) + " assigned " +
                    to_string(small_total[i]) + " instead of 1");
    }
  }

  // Pattern counters and item rows.
  std::set<Pattern> seen_patterns;
  std::vector<std::int64_t> per_class(large_classes_.size(), 0);
  std::vector<std::int64_t> produced(R, 0);
  for (const auto& use : sol.patterns) {
    const std::size_t cls = class_of_alpha(use.pattern.alpha);
    if (cls == npos || !patterns(cls).contains(use.pattern)) {
      out.push_back("pattern outside the feasible set");
      continue;
    }
    if (!seen_patterns.insert(use.pattern).second) out.push_back("pattern listed twice");
    if (use.count < 0) out.push_back("negative pattern counter");
    per_class[cls] += use.count;
    for (std::size_t r = 0; r < R; ++r) produced[r] += use.pattern.beta[r] * use.count;
  }
  for (std::size_t c = 0; c < large_classes_.size(); ++c) {
    if (per_class[c] != static_cast<std::int64_t>(large_classes_[c].items.size())) {
      out.push_back("items row for size " + to_string(large_classes_[c].size) + ": " +
                    std::to_string(per_class[c]) + " patterns for " +
                    std::to_string(large_classes_[c].items.size()) + " items");
    }
  }

  // Part counters: v = produced parts = configuration slots.
  if (sol.parts.size() != R) {
    out.push_back("part counter vector has wrong length");
  } else {
    for (std::size_t r = 0; r < R; ++r) {
      if (sol.parts[r] != produced[r]) {
        out.push_back("part counter " + std::to_string(r + 1) + " does not match the patterns");
      }
      if (produced[r] != slot_count[r]) {
        out.push_back("parts row " + std::to_string(r + 1) + ": " + std::to_string(produced[r]) +
                      " parts produced, " + std::to_string(slot_count[r]) + " slots");
      }
    }
  }
  return out;
}

MilpModel build_model(const RoundedInstance& ri, const Classification& cls) {
  std::vector<Size> small_sizes;
  for (ItemId i : cls.small) {
    if (ri.items.at(i) >= ri.eps.value()) throw PreconditionError("small item is not small");
    small_sizes.push_back(ri.items[i]);
  }
  std::vector<LargeClass> classes;
  for (const auto& size : cls.distinct_large_sizes) {
    const Rational alpha = size / ri.eps.squared();
    if (!is_integer(alpha) || alpha <= 0) {
      throw PreconditionError("large size " + to_string(size) + " is not a multiple of eps^2");
    }
    classes.push_back(LargeClass{size, to_int64(alpha), {}});
  }
  for (ItemId i : cls.large) {
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const LargeClass& c) { return c.size == ri.items.at(i); });
    if (it == classes.end()) {
      throw PreconditionError("no pattern group for large item " + std::to_string(i) + " of size " +
                              to_string(ri.items[i]));
    }
    it->items.push_back(i);
  }
  return MilpModel(ri.eps, ri.cap, ri.bins, ri.k, cls.small, std::move(small_sizes), std::move(classes));
}

MilpSolution packing_to_milp_solution(const Packing& nice, const RoundedInstance& ri,
                                      const MilpModel& model) {
  const auto report = verify_packing(ri.instance(), nice);
  if (!report.feasible) {
    throw PreconditionError("packing is not feasible: " + report.violations.front());
  }
  if (report.max_load > model.cap()) {
    throw PreconditionError("packing exceeds the working cap");
  }
  const Rational grid = model.eps().squared();
  const std::int64_t R = model.units();

  std::vector<long> small_index(ri.items.size(), -1);
  for (std::size_t i = 0; i < model.small_items().size(); ++i) {
    small_index[model.small_items()[i]] = static_cast<long>(i);
  }

  std::map<Configuration, ConfigurationUse> by_config;
  std::vector<std::vector<std::int64_t>> item_parts(ri.items.size());
  for (BinId b = 0; b < nice.bins(); ++b) {
    Size small_mass = 0;
    std::vector<std::int64_t> large_parts;
    for (const auto& p : nice.bin(b)) {
      if (small_index[p.item] >= 0) {
        small_mass += p.size;
        continue;
      }
      const Rational units = p.size / grid;
      if (!is_integer(units)) {
        throw PreconditionError("packing is not nice: item " + std::to_string(p.item) +
                                " has a part of size " + to_string(p.size) + " in bin " +
                                std::to_string(b));
      }
      large_parts.push_back(to_int64(units));
      item_parts[p.item].push_back(to_int64(units));
    }
    Configuration c;
    c.gamma = to_int64(floor_of(small_mass / grid));
    c.delta.assign(static_cast<std::size_t>(R), 0);
    for (auto r : large_parts) ++c.delta[static_cast<std::size_t>(r - 1)];

    auto [it, inserted] = by_config.try_emplace(c);
    if (inserted) {
      it->second.config = c;
      it->second.small_share.assign(model.small_items().size(), 0);
    }
    ++it->second.count;
    for (const auto& p : nice.bin(b)) {
      const long si = small_index[p.item];
      if (si < 0) continue;
      const Size& full = ri.items[p.item];
      it->second.small_share[static_cast<std::size_t>(si)] += full == 0 ? Rational(1) : p.size / full;
    }
  }

  MilpSolution sol;
  for (auto& [config, use] : by_config) sol.configurations.push_back(std::move(use));

  std::map<Pattern, std::int64_t> by_pattern;
  for (const auto& cls : model.large_classes()) {
    for (ItemId i : cls.items) ++by_pattern[Pattern::from_parts(item_parts[i], R)];
  }
  for (const auto& [pattern, count] : by_pattern) sol.patterns.push_back(PatternUse{pattern, count});
  sol.derive_parts(R);
  return sol;
}

namespace {

std::string config_name(const Configuration& c) {
  std::string s = "(" + std::to_string(c.gamma) + ";";
  for (std::size_t r = 0; r < c.delta.size(); ++r) {
    if (c.delta[r] != 0) s += " " + std::to_string(c.delta[r]) + "x" + std::to_string(r + 1);
  }
  return s + ")";
}

std::string pattern_name(const Pattern& p) {
  std::string s = "(" + std::to_string(p.alpha) + ";";
  for (std::size_t r = 0; r < p.beta.size(); ++r) {
    if (p.beta[r] != 0) s += " " + std::to_string(p.beta[r]) + "x" + std::to_string(r + 1);
  }
  return s + ")";
}

void write_term(std::ostream& out, const Rational& coef, const std::string& var, bool& first) {
  if (coef == 0) return;
  if (coef < 0) {
    out << " - ";
  } else if (!first) {
    out << " + ";
  } else {
    out << ' ';
  }
  const Rational mag = abs(coef);
  if (mag != 1) out << to_string(mag) << ' ';
  out << var;
  first = false;
}

}  // namespace

void write_model(std::ostream& out, const MilpModel& model, std::uint64_t cap) {
  const auto configs = model.configurations().materialize(cap);
  std::vector<std::vector<Pattern>> patterns;
  for (std::size_t c = 0; c < model.large_classes().size(); ++c) {
    patterns.push_back(model.patterns(c).materialize(cap));
  }
  const auto S = model.small_items().size();
  const auto R = static_cast<std::size_t>(model.units());

  out << "\\ dsbp configuration MILP (feasibility)\n";
  out << "\\ eps = 1/" << model.eps().denominator() << "  cap = " << to_string(model.cap())
      << "  R = " << R << "  bins = " << model.bins() << "  k = " << model.k() << '\n';
  for (std::size_t c = 0; c < configs.size(); ++c) {
    out << "\\ y" << c << " = configuration " << config_name(configs[c]) << '\n';
  }
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    for (std::size_t p = 0; p < patterns[l].size(); ++p) {
      out << "\\ z" << l << '_' << p << " = pattern " << pattern_name(patterns[l][p]) << '\n';
    }
  }
  for (std::size_t i = 0; i < S; ++i) {
    out << "\\ x" << i << "_c = share of item " << model.small_items()[i] << " (size "
        << to_string(model.small_sizes()[i]) << ") in configuration c\n";
  }
  out << "subject to\n";

  bool first = true;
  out << " bins:";
  for (std::size_t c = 0; c < configs.size(); ++c) write_term(out, 1, "y" + std::to_string(c), first);
  out << " = " << model.bins() << '\n';

  for (std::size_t i = 0; i < S; ++i) {
    first = true;
    out << " small" << i << ':';
    for (std::size_t c = 0; c < configs.size(); ++c) {
      write_term(out, 1, "x" + std::to_string(i) + "_" + std::to_string(c), first);
    }
    out << " = 1\n";
  }

  for (std::size_t r = 0; r < R; ++r) {
    first = true;
    out << " parts" << r + 1 << ':';
    for (std::size_t c = 0; c < configs.size(); ++c) {
      write_term(out, configs[c].delta[r], "y" + std::to_string(c), first);
    }
    for (std::size_t l = 0; l < patterns.size(); ++l) {
      for (std::size_t p = 0; p < patterns[l].size(); ++p) {
        write_term(out, -patterns[l][p].beta[r], "z" + std::to_string(l) + "_" + std::to_string(p), first);
      }
    }
    if (first) out << " 0";
    out << " = 0\n";
  }

  for (std::size_t l = 0; l < patterns.size(); ++l) {
    first = true;
    out << " items" << l << ':';
    for (std::size_t p = 0; p < patterns[l].size(); ++p) {
      write_term(out, 1, "z" + std::to_string(l) + "_" + std::to_string(p), first);
    }
    out << " = " << model.large_classes()[l].items.size() << '\n';
  }

  const Rational grid = model.eps().squared();
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const std::string y = "y" + std::to_string(c);
    first = true;
    out << " card" << c << ':';
    for (std::size_t i = 0; i < S; ++i) write_term(out, 1, "x" + std::to_string(i) + "_" + std::to_string(c), first);
    write_term(out, -Rational(static_cast<long>(model.k()) - configs[c].parts()), y, first);
    if (first) out << " 0";
    out << " <= 0\n";

    first = true;
    out << " mass" << c << ':';
    for (std::size_t i = 0; i < S; ++i) {
      write_term(out, model.small_sizes()[i], "x" + std::to_string(i) + "_" + std::to_string(c), first);
    }
    write_term(out, -Rational(configs[c].gamma + 1) * grid, y, first);
    out << " <= 0\n";
  }

  out << "bounds\n";
  for (std::size_t c = 0; c < configs.size(); ++c) out << " 0 <= y" << c << " <= " << model.bins() << '\n';
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    for (std::size_t p = 0; p < patterns[l].size(); ++p) {
      out << " 0 <= z" << l << '_' << p << " <= " << model.large_classes()[l].items.size() << '\n';
    }
  }
  out << "general\n";
  for (std::size_t c = 0; c < configs.size(); ++c) out << " y" << c << '\n';
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    for (std::size_t p = 0; p < patterns[l].size(); ++p) out << " z" << l << '_' << p << '\n';
  }
  out << "end\n";
}

}  // namespace dsbp
