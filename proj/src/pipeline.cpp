#include "dsbp/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "dsbp/errors.hpp"
#include "dsbp/guess.hpp"
#include "dsbp/lp_rounding.hpp"

namespace dsbp {

ConvertedPacking milp_to_packing(const MilpSolution& sol, const RoundedInstance& ri,
                                 const MilpModel& model) {
  const auto problems = model.violations(sol);
  if (!problems.empty()) throw InternalError("MILP solution is infeasible: " + problems.front());

  const std::size_t m = model.bins();
  const auto R = static_cast<std::size_t>(model.units());
  const Rational grid = model.eps().squared();

  // Patterns to items, per size class.
  std::vector<std::vector<ItemId>> parts_by_size(R + 1);
  for (std::size_t l = 0; l < model.large_classes().size(); ++l) {
    const auto& cls = model.large_classes()[l];
    std::vector<ItemId> items = cls.items;
    std::sort(items.begin(), items.end());
    std::vector<PatternUse> uses;
    for (const auto& use : sol.patterns) {
      if (use.pattern.alpha == cls.alpha) uses.push_back(use);
    }
    std::sort(uses.begin(), uses.end(),
              [](const PatternUse& a, const PatternUse& b) { return a.pattern < b.pattern; });
    std::size_t next = 0;
    for (const auto& use : uses) {
      for (std::int64_t c = 0; c < use.count; ++c) {
        if (next >= items.size()) throw InternalError("more patterns than items of size " + to_string(cls.size));
        const ItemId item = items[next++];
        for (std::size_t r = 1; r <= R; ++r) {
          for (std::int64_t t = 0; t < use.pattern.beta[r - 1]; ++t) parts_by_size[r].push_back(item);
        }
      }
    }
    if (next != items.size()) throw InternalError("fewer patterns than items of size " + to_string(cls.size));
  }
  for (auto& list : parts_by_size) std::sort(list.begin(), list.end());

  // Configurations to bins.
  std::vector<ConfigurationUse> uses = sol.configurations;
  std::sort(uses.begin(), uses.end(),
            [](const ConfigurationUse& a, const ConfigurationUse& b) { return a.config < b.config; });
  std::vector<std::size_t> bin_use(m);
  {
    std::size_t b = 0;
    for (std::size_t u = 0; u < uses.size(); ++u) {
      if (uses[u].count == 0) {
        for (const auto& share : uses[u].small_share) {
          if (share != 0) throw InternalError("small item assigned to a configuration with no bins");
        }
      }
      for (std::int64_t c = 0; c < uses[u].count; ++c) {
        if (b >= m) throw InternalError("configurations cover more bins than exist");
        bin_use[b++] = u;
      }
    }
    if (b != m) throw InternalError("configurations cover fewer bins than exist");
  }

  // Parts into configuration slots, increasing size, lowest item, lowest bin.
  Packing pack(m);
  for (std::size_t r = 1; r <= R; ++r) {
    std::size_t next = 0;
    const Size part = Rational(static_cast<long>(r)) * grid;
    for (std::size_t b = 0; b < m; ++b) {
      for (std::int64_t t = 0; t < uses[bin_use[b]].config.delta[r - 1]; ++t) {
        if (next >= parts_by_size[r].size()) throw InternalError("more slots than parts of size " + std::to_string(r));
        pack.add(b, parts_by_size[r][next++], part);
      }
    }
    if (next != parts_by_size[r].size()) throw InternalError("more parts than slots of size " + std::to_string(r));
  }

  // Small items: fractional x_ic / y_c per bin, then best fit.
  const auto& small = model.small_items();
  const std::size_t S = small.size();
  std::vector<std::vector<Rational>> x(S, std::vector<Rational>(m, 0));
  std::vector<Size> budgets(m);
  std::vector<std::int64_t> slots(m);
  ConversionStats stats;
  stats.load_before_best_fit.assign(m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    const auto& use = uses[bin_use[b]];
    budgets[b] = Rational(use.config.gamma + 1) * grid;
    slots[b] = static_cast<std::int64_t>(model.k()) - use.config.parts();
    stats.load_before_best_fit[b] = pack.load(b);
    for (std::size_t i = 0; i < S; ++i) {
      x[i][b] = use.small_share[i] / use.count;
      stats.load_before_best_fit[b] += x[i][b] * model.small_sizes()[i];
    }
  }
  const IntegralAssignment placed = best_fit_integralize(model.small_sizes(), budgets, slots, x);
  for (std::size_t i = 0; i < S; ++i) pack.add(placed[i], small[i], model.small_sizes()[i]);

  const auto report = verify_packing(ri.instance(), pack);
  if (!report.feasible) throw InternalError("converted packing is infeasible: " + report.violations.front());
  const Size bound = model.cap() + grid + model.eps().value();
  if (report.max_load > bound) {
    throw InternalError("converted packing has load " + to_string(report.max_load) + " above " + to_string(bound));
  }
  stats.load_after_best_fit.assign(m, 0);
  for (std::size_t b = 0; b < m; ++b) stats.load_after_best_fit[b] = pack.load(b);
  stats.max_load = report.max_load;
  return ConvertedPacking{std::move(pack), std::move(stats)};
}

const GuessRecord* PipelineTrace::selected() const {
  for (const auto& g : guesses) {
    if (g.selected) return &g;
  }
  return nullptr;
}

nlohmann::json PipelineTrace::to_json() const {
  nlohmann::json out;
  out["eps"] = "1/" + std::to_string(eps_denominator);
  out["lower_bound"] = to_string(lower_bound);
  if (!note.empty()) out["note"] = note;
  out["guesses"] = nlohmann::json::array();
  for (const auto& g : guesses) {
    nlohmann::json j;
    j["exponent"] = g.exponent;
    j["guess"] = to_string(g.guess);
    j["small_items"] = g.small_items;
    j["large_items"] = g.large_items;
    j["distinct_large_sizes"] = g.distinct_large_sizes;
    j["max_part"] = g.max_part;
    j["configurations"] = g.configurations.get_str();
    j["patterns"] = g.patterns.get_str();
    j["variables"] = g.variables.get_str();
    j["constraints"] = g.constraints.get_str();
    j["status"] = to_string(g.status);
    j["nodes"] = g.nodes;
    j["lp_solves"] = g.lp_solves;
    j["seconds"] = g.seconds;
    if (!g.note.empty()) j["note"] = g.note;
    j["selected"] = g.selected;
    if (g.conversion) {
      nlohmann::json before = nlohmann::json::array();
      nlohmann::json after = nlohmann::json::array();
      for (const auto& s : g.conversion->load_before_best_fit) before.push_back(to_string(s));
      for (const auto& s : g.conversion->load_after_best_fit) after.push_back(to_string(s));
      j["load_before_best_fit"] = before;
      j["load_after_best_fit"] = after;
      j["rounded_max_load"] = to_string(g.conversion->max_load);
    }
    if (g.value) j["value"] = to_string(*g.value);
    out["guesses"].push_back(std::move(j));
  }
  return out;
}

EptasResult eptas_solve(const Instance& inst, const Epsilon& eps, const SolveOptions& options) {
  if (!check_feasible(inst)) {
    throw InfeasibleInstance(std::to_string(inst.size()) + " items do not fit " + std::to_string(inst.bins()) +
                             " bins with at most " + std::to_string(inst.k()) + " parts each");
  }
  PipelineTrace trace;
  trace.eps_denominator = eps.denominator();
  trace.lower_bound = lower_bound(inst);
  if (inst.total_size() == 0) {
    trace.note = "all items have size zero";
    return EptasResult{0, round_robin_zero_packing(inst), std::move(trace)};
  }

  bool any_unknown = false;
  for (const auto& guess : guess_values(inst, eps)) {
    const auto started = std::chrono::steady_clock::now();
    GuessRecord rec;
    rec.exponent = guess.exponent;
    rec.guess = guess.value;

    const RoundedInstance ri = round_instance(scale_instance(inst, guess.value), eps);
    const Classification cls = classify(ri);
    const MilpModel model = build_model(ri, cls);
    rec.small_items = cls.small.size();
    rec.large_items = cls.large.size();
    rec.distinct_large_sizes = cls.distinct_large_sizes.size();
    rec.max_part = model.units();
    rec.configurations = model.configuration_count();
    rec.patterns = model.pattern_count();
    rec.variables = model.variable_count();
    rec.constraints = model.constraint_count();

    SolveOutcome outcome = solve_milp(model, options);
    rec.status = outcome.status;
    rec.nodes = outcome.nodes;
    rec.lp_solves = outcome.lp_solves;
    rec.note = outcome.note;

    if (outcome.status == SolveStatus::Feasible) {
      ConvertedPacking converted = milp_to_packing(*outcome.solution, ri, model);
      Packing lifted = lift_packing(converted.packing, ri, guess.value);
      const auto report = verify_packing(inst, lifted);
      if (!report.feasible) throw InternalError("lifted packing is infeasible: " + report.violations.front());
      rec.conversion = std::move(converted.stats);
      rec.value = report.max_load;
      rec.selected = true;
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      trace.guesses.push_back(std::move(rec));
      return EptasResult{report.max_load, std::move(lifted), std::move(trace)};
    }
    any_unknown = any_unknown || outcome.status == SolveStatus::Unknown;
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    trace.guesses.push_back(std::move(rec));
  }
  if (any_unknown) throw ResourceLimit("no guess could be decided within the solver limits");
  throw InternalError("every guess was proved infeasible, including g >= W");
}

}  // namespace dsbp
