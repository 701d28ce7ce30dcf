#include "decomposed_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "dsbp/errors.hpp"

namespace dsbp {
namespace {

// Exact search over per-bin amounts of each large item, in units of eps^2.
//
// Restrictions that keep the search complete:
//  - parts of one item in one bin are a single amount;
//  - the item/bin support graph can be taken to be a forest (shifting units
//    around a cycle keeps every load and never adds a part), so the number
//    of parts beyond one per item is at most m - 1;
//  - bins with equal (part count, load) are interchangeable: an item uses a
//    prefix of each such class with non-increasing amounts;
//  - states that failed once, keyed by the next item, the spare parts used
//    and the multiset of bin states, fail again.
class Search {
 public:
  Search(const MilpModel& model, std::uint64_t node_limit)
      : model_(model),
        R_(model.units()),
        k_(static_cast<std::int64_t>(model.k())),
        m_(model.bins()),
        limit_(node_limit),
        load_(m_, 0),
        deg_(m_, 0) {
    for (const auto& cls : model.large_classes()) {
      for (ItemId id : cls.items) items_.push_back(Item{id, cls.alpha, (cls.alpha + R_ - 1) / R_});
    }
    std::stable_sort(items_.begin(), items_.end(), [](const Item& a, const Item& b) {
      return a.alpha != b.alpha ? a.alpha > b.alpha : a.id < b.id;
    });
    const std::size_t n = items_.size();
    rem_alpha_.assign(n + 1, 0);
    rem_min_parts_.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
      rem_alpha_[i] = rem_alpha_[i + 1] + items_[i].alpha;
      rem_min_parts_[i] = rem_min_parts_[i + 1] + items_[i].min_parts;
    }
    const Rational grid = model.eps().squared();
    for (const auto& s : model.small_sizes()) {
      small_units_.push_back(s / grid);
      small_mass_units_ += small_units_.back();
    }
    const auto slots_total = k_ * static_cast<std::int64_t>(m_);
    extras_budget_ = std::min<std::int64_t>(
        static_cast<std::int64_t>(m_) - 1,
        slots_total - static_cast<std::int64_t>(small_units_.size()) - static_cast<std::int64_t>(n));
    assignment_.assign(n, {});
  }

  SolveOutcome run() {
    SolveOutcome outcome;
    try {
      const bool found = place(0);
      outcome.status = found ? SolveStatus::Feasible : SolveStatus::Infeasible;
      if (found) outcome.solution = build_solution();
    } catch (const NodeLimit&) {
      outcome.status = SolveStatus::Unknown;
      outcome.note = "node limit of " + std::to_string(limit_) + " reached";
    }
    outcome.nodes = nodes_;
    outcome.lp_solves = lp_solves_;
    return outcome;
  }

 private:
  struct Item {
    ItemId id;
    std::int64_t alpha;
    std::int64_t min_parts;
  };
  struct BinClass {
    std::int64_t load;
    std::int64_t deg;
    std::vector<std::size_t> bins;
  };
  struct NodeLimit {};

  void tick() {
    if (++nodes_ > limit_) throw NodeLimit{};
  }

  bool bounds_hold(std::size_t i) const {
    std::int64_t slots = 0;
    std::int64_t room = 0;
    for (std::size_t b = 0; b < m_; ++b) {
      if (deg_[b] >= k_) continue;
      slots += k_ - deg_[b];
      room += R_ - load_[b];
    }
    if (slots < rem_min_parts_[i] + static_cast<std::int64_t>(small_units_.size())) return false;
    if (rem_min_parts_[i] - static_cast<std::int64_t>(items_.size() - i) > extras_budget_ - extras_used_) {
      return false;
    }
    if (room < rem_alpha_[i]) return false;
    std::int64_t open_bins = 0;
    for (std::size_t b = 0; b < m_; ++b) open_bins += deg_[b] < k_ ? 1 : 0;
    return Rational(room + open_bins - rem_alpha_[i]) >= small_mass_units_;
  }

  std::string state_key(std::size_t i) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> states;
    for (std::size_t b = 0; b < m_; ++b) states.emplace_back(deg_[b], load_[b]);
    std::sort(states.begin(), states.end());
    std::string key;
    auto put = [&](std::int64_t v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
    put(static_cast<std::int64_t>(i));
    put(extras_used_);
    for (const auto& [d, l] : states) {
      put(d);
      put(l);
    }
    return key;
  }

  bool place(std::size_t i) {
    if (i == items_.size()) return small_items_fit();
    tick();
    if (!bounds_hold(i)) return false;
    const std::string key = state_key(i);
    if (failed_.count(key) != 0) return false;

    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> grouped;
    for (std::size_t b = 0; b < m_; ++b) {
      if (deg_[b] < k_ && load_[b] < R_) grouped[{load_[b], deg_[b]}].push_back(b);
    }
    std::vector<BinClass> classes;
    for (auto& [state, bins] : grouped) classes.push_back(BinClass{state.first, state.second, std::move(bins)});
    std::vector<std::int64_t> suffix_room(classes.size() + 1, 0);
    for (std::size_t c = classes.size(); c-- > 0;) {
      suffix_room[c] = suffix_room[c + 1] +
                       static_cast<std::int64_t>(classes[c].bins.size()) * (R_ - classes[c].load);
    }
    const std::int64_t max_parts = 1 + extras_budget_ - extras_used_;
    const bool ok = distribute(i, classes, suffix_room, 0, 0, items_[i].alpha, items_[i].alpha, 0, max_parts);
    if (!ok) {
      if (failed_.size() >= kMemoLimit) failed_.clear();
      failed_.insert(key);
    }
    return ok;
  }

  bool distribute(std::size_t i, const std::vector<BinClass>& classes,
                  const std::vector<std::int64_t>& suffix_room, std::size_t ci, std::size_t j,
                  std::int64_t prev, std::int64_t rem, std::int64_t parts, std::int64_t max_parts) {
    if (rem == 0) {
      extras_used_ += parts - 1;
      const bool ok = place(i + 1);
      if (!ok) extras_used_ -= parts - 1;
      return ok;
    }
    if (parts >= max_parts || ci >= classes.size()) return false;
    const BinClass& cls = classes[ci];
    const std::int64_t room = R_ - cls.load;
    const auto left_in_class = static_cast<std::int64_t>(cls.bins.size() - j);
    if (rem > left_in_class * room + suffix_room[ci + 1]) return false;
    if (rem > (max_parts - parts) * room) return false;

    if (j < cls.bins.size()) {
      const std::size_t b = cls.bins[j];
      for (std::int64_t a = std::min({rem, room, prev}); a >= 1; --a) {
        tick();
        load_[b] += a;
        ++deg_[b];
        assignment_[i].emplace_back(b, a);
        const bool ok = distribute(i, classes, suffix_room, ci, j + 1, a, rem - a, parts + 1, max_parts);
        if (ok) return true;
        assignment_[i].pop_back();
        --deg_[b];
        load_[b] -= a;
      }
    }
    return distribute(i, classes, suffix_room, ci + 1, 0, rem, rem, parts, max_parts);
  }

  bool small_items_fit() {
    tick();
    std::vector<std::pair<std::int64_t, std::int64_t>> profile;
    for (std::size_t b = 0; b < m_; ++b) profile.emplace_back(deg_[b], load_[b]);
    std::sort(profile.begin(), profile.end());
    if (leaf_failures_.count(profile) != 0) return false;

    std::vector<std::int64_t> slots(m_);
    std::vector<Size> budgets(m_);
    for (std::size_t b = 0; b < m_; ++b) {
      slots[b] = k_ - deg_[b];
      budgets[b] = Rational(R_ - load_[b] + 1);
    }
    ++lp_solves_;
    auto x = fractional_small_assignment(small_units_, slots, budgets);
    if (!x) {
      if (leaf_failures_.size() >= kMemoLimit) leaf_failures_.clear();
      leaf_failures_.insert(std::move(profile));
      return false;
    }
    small_x_ = std::move(*x);
    return true;
  }

  MilpSolution build_solution() const {
    const auto R = static_cast<std::size_t>(R_);
    const std::size_t S = small_units_.size();
    std::vector<Configuration> per_bin(m_);
    for (std::size_t b = 0; b < m_; ++b) {
      per_bin[b].gamma = R_ - load_[b];
      per_bin[b].delta.assign(R, 0);
    }
    MilpSolution sol;
    std::map<Pattern, std::int64_t> patterns;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      std::vector<std::int64_t> amounts;
      for (const auto& [b, a] : assignment_[i]) {
        ++per_bin[b].delta[static_cast<std::size_t>(a - 1)];
        amounts.push_back(a);
      }
      ++patterns[Pattern::from_parts(amounts, R_)];
    }
    std::map<Configuration, ConfigurationUse> configs;
    for (std::size_t b = 0; b < m_; ++b) {
      auto [it, inserted] = configs.try_emplace(per_bin[b]);
      if (inserted) {
        it->second.config = per_bin[b];
        it->second.small_share.assign(S, 0);
      }
      ++it->second.count;
      for (std::size_t s = 0; s < S; ++s) it->second.small_share[s] += small_x_[s][b];
    }
    for (auto& [c, use] : configs) sol.configurations.push_back(std::move(use));
    for (const auto& [p, count] : patterns) sol.patterns.push_back(PatternUse{p, count});
    sol.derive_parts(R_);
    return sol;
  }

  static constexpr std::size_t kMemoLimit = 4'000'000;

  const MilpModel& model_;
  std::int64_t R_;
  std::int64_t k_;
  std::size_t m_;
  std::uint64_t limit_;
  std::vector<std::int64_t> load_;
  std::vector<std::int64_t> deg_;
  std::vector<Item> items_;
  std::vector<std::int64_t> rem_alpha_;
  std::vector<std::int64_t> rem_min_parts_;
  std::vector<Rational> small_units_;
  Rational small_mass_units_ = 0;
  std::int64_t extras_budget_ = 0;
  std::int64_t extras_used_ = 0;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> assignment_;
  std::unordered_set<std::string> failed_;
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> leaf_failures_;
  std::vector<std::vector<Rational>> small_x_;
  std::uint64_t nodes_ = 0;
  std::uint64_t lp_solves_ = 0;
};

}  // namespace

SolveOutcome solve_decomposed(const MilpModel& model, const SolveOptions& options) {
  return Search(model, options.node_limit).run();
}

}  // namespace dsbp
