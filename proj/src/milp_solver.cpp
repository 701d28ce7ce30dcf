#include "dsbp/milp_solver.hpp"

#include <map>
#include <utility>

#include "decomposed_search.hpp"
#include "dsbp/errors.hpp"

namespace dsbp {

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Feasible:
      return "feasible";
    case SolveStatus::Infeasible:
      return "infeasible";
    case SolveStatus::Unknown:
      return "unknown";
  }
  return "?";
}

const char* to_string(SolverStrategy strategy) {
  return strategy == SolverStrategy::Decomposed ? "decomposed" : "lp-bnb";
}

SolverStrategy parse_strategy(const std::string& name) {
  if (name == "decomposed") return SolverStrategy::Decomposed;
  if (name == "lp-bnb") return SolverStrategy::LpBranchAndBound;
  throw FormatError("unknown solver strategy '" + name + "' (expected decomposed or lp-bnb)");
}

BranchAndBoundResult branch_and_bound(const LinearProgram& lp,
                                      const std::vector<IntegerVariable>& integers,
                                      std::uint64_t node_limit) {
  struct Node {
    std::vector<std::int64_t> lower;
    std::vector<std::int64_t> upper;
  };
  BranchAndBoundResult result;
  std::vector<Node> stack;
  {
    Node root;
    for (const auto& iv : integers) {
      root.lower.push_back(0);
      root.upper.push_back(iv.upper);
    }
    stack.push_back(std::move(root));
  }

  while (!stack.empty()) {
    if (result.nodes >= node_limit) {
      result.status = SolveStatus::Unknown;
      return result;
    }
    ++result.nodes;
    Node node = std::move(stack.back());
    stack.pop_back();

    LinearProgram restricted = lp;
    bool empty_box = false;
    for (std::size_t i = 0; i < integers.size(); ++i) {
      if (node.lower[i] > node.upper[i]) empty_box = true;
      if (node.lower[i] > 0) {
        restricted.add_constraint({{integers[i].var, 1}}, RowSense::GreaterEqual, node.lower[i]);
      }
      restricted.add_constraint({{integers[i].var, 1}}, RowSense::LessEqual, node.upper[i]);
    }
    if (empty_box) continue;

    ++result.lp_solves;
    const LpResult lp_result = simplex_solve(restricted);
    if (lp_result.status != LpStatus::Optimal) continue;

    // Most fractional integer variable; ties to the lowest index.
    std::size_t branch = integers.size();
    Rational best_distance = 1;
    for (std::size_t i = 0; i < integers.size(); ++i) {
      const Rational& value = lp_result.values[integers[i].var];
      if (is_integer(value)) continue;
      const Rational frac = value - Rational(floor_of(value));
      const Rational distance = abs(frac - Rational(1, 2));
      if (branch == integers.size() || distance < best_distance) {
        branch = i;
        best_distance = distance;
      }
    }
    if (branch == integers.size()) {
      result.status = SolveStatus::Feasible;
      result.values = lp_result.values;
      return result;
    }

    const Integer floor_value = floor_of(lp_result.values[integers[branch].var]);
    Node up = node;
    up.lower[branch] = to_int64(floor_value) + 1;
    Node down = std::move(node);
    down.upper[branch] = to_int64(floor_value);
    stack.push_back(std::move(up));
    stack.push_back(std::move(down));
  }
  result.status = SolveStatus::Infeasible;
  return result;
}

std::optional<std::vector<std::vector<Rational>>> fractional_small_assignment(
    const std::vector<Size>& sizes, const std::vector<std::int64_t>& slots,
    const std::vector<Size>& budgets) {
  const std::size_t n = sizes.size();
  const std::size_t bins = slots.size();
  if (budgets.size() != bins) throw PreconditionError("slots and budgets differ in length");
  std::vector<std::vector<Rational>> x(n, std::vector<Rational>(bins, 0));
  if (n == 0) return x;

  Size mass = 0;
  for (const auto& s : sizes) mass += s;
  std::int64_t slot_total = 0;
  Size budget_total = 0;
  for (std::size_t b = 0; b < bins; ++b) {
    if (slots[b] <= 0) continue;
    slot_total += slots[b];
    if (budgets[b] > 0) budget_total += budgets[b];
  }
  if (slot_total < static_cast<std::int64_t>(n) || budget_total < mass) return std::nullopt;

  // Every item spread over the bins in the same proportions.
  {
    std::vector<Rational> lambda(bins, 0);
    Rational total = 0;
    const Rational count(static_cast<long>(n));
    for (std::size_t b = 0; b < bins; ++b) {
      if (slots[b] <= 0 || budgets[b] < 0) continue;
      Rational by_slots = Rational(slots[b]) / count;
      const Rational by_budget = mass == 0 ? by_slots : Rational(budgets[b] / mass);
      lambda[b] = std::min(by_slots, by_budget);
      total += lambda[b];
    }
    if (total >= 1) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < bins; ++b) x[i][b] = lambda[b] / total;
      }
      return x;
    }
  }

  // LP over groups of equal sizes.
  std::map<Size, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[sizes[i]].push_back(i);
  std::vector<std::size_t> open;
  for (std::size_t b = 0; b < bins; ++b) {
    if (slots[b] > 0 && budgets[b] >= 0) open.push_back(b);
  }
  const std::size_t G = groups.size();
  LinearProgram lp(G * open.size());
  auto var = [&](std::size_t g, std::size_t j) { return g * open.size() + j; };
  std::size_t g = 0;
  for (const auto& [size, members] : groups) {
    std::vector<LinearTerm> row;
    for (std::size_t j = 0; j < open.size(); ++j) row.push_back({var(g, j), 1});
    lp.add_constraint(std::move(row), RowSense::Equal, static_cast<long>(members.size()));
    ++g;
  }
  for (std::size_t j = 0; j < open.size(); ++j) {
    std::vector<LinearTerm> count_row;
    std::vector<LinearTerm> mass_row;
    g = 0;
    for (const auto& [size, members] : groups) {
      count_row.push_back({var(g, j), 1});
      if (size != 0) mass_row.push_back({var(g, j), size});
      ++g;
    }
    lp.add_constraint(std::move(count_row), RowSense::LessEqual, slots[open[j]]);
    lp.add_constraint(std::move(mass_row), RowSense::LessEqual, budgets[open[j]]);
  }
  const LpResult res = simplex_solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  g = 0;
  for (const auto& [size, members] : groups) {
    const Rational count(static_cast<long>(members.size()));
    for (std::size_t j = 0; j < open.size(); ++j) {
      const Rational share = res.values[var(g, j)] / count;
      for (std::size_t i : members) x[i][open[j]] = share;
    }
    ++g;
  }
  return x;
}

namespace {

SolveOutcome solve_by_lp_branch_and_bound(const MilpModel& model, const SolveOptions& options) {
  SolveOutcome outcome;
  std::vector<Configuration> configs;
  std::vector<std::vector<Pattern>> patterns;
  try {
    configs = model.configurations().materialize(options.enumeration_cap);
    std::uint64_t used = configs.size();
    for (std::size_t l = 0; l < model.large_classes().size(); ++l) {
      if (used > options.enumeration_cap) throw ResourceLimit("enumeration cap");
      patterns.push_back(model.patterns(l).materialize(options.enumeration_cap - used));
      used += patterns.back().size();
    }
  } catch (const ResourceLimit& e) {
    outcome.status = SolveStatus::Unknown;
    outcome.note = e.what();
    return outcome;
  }

  const std::size_t S = model.small_items().size();
  const std::size_t C = configs.size();
  const auto R = static_cast<std::size_t>(model.units());
  std::size_t P = 0;
  for (const auto& list : patterns) P += list.size();

  // Variable layout: x[i][c] | y[c] | z[p].
  LinearProgram lp(S * C + C + P);
  auto x_var = [&](std::size_t i, std::size_t c) { return i * C + c; };
  auto y_var = [&](std::size_t c) { return S * C + c; };
  std::vector<std::size_t> z_first(patterns.size(), 0);
  for (std::size_t l = 0, next = S * C + C; l < patterns.size(); ++l) {
    z_first[l] = next;
    next += patterns[l].size();
  }

  {
    std::vector<LinearTerm> row;
    for (std::size_t c = 0; c < C; ++c) row.push_back({y_var(c), 1});
    lp.add_constraint(std::move(row), RowSense::Equal, static_cast<long>(model.bins()));
  }
  for (std::size_t i = 0; i < S; ++i) {
    std::vector<LinearTerm> row;
    for (std::size_t c = 0; c < C; ++c) row.push_back({x_var(i, c), 1});
    lp.add_constraint(std::move(row), RowSense::Equal, 1);
  }
  for (std::size_t r = 0; r < R; ++r) {
    std::vector<LinearTerm> row;
    for (std::size_t c = 0; c < C; ++c) {
      if (configs[c].delta[r] != 0) row.push_back({y_var(c), configs[c].delta[r]});
    }
    for (std::size_t l = 0; l < patterns.size(); ++l) {
      for (std::size_t p = 0; p < patterns[l].size(); ++p) {
        if (patterns[l][p].beta[r] != 0) row.push_back({z_first[l] + p, -patterns[l][p].beta[r]});
      }
    }
    if (!row.empty()) lp.add_constraint(std::move(row), RowSense::Equal, 0);
  }
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    std::vector<LinearTerm> row;
    for (std::size_t p = 0; p < patterns[l].size(); ++p) row.push_back({z_first[l] + p, 1});
    lp.add_constraint(std::move(row), RowSense::Equal,
                      static_cast<long>(model.large_classes()[l].items.size()));
  }
  const Rational grid = model.eps().squared();
  for (std::size_t c = 0; c < C; ++c) {
    std::vector<LinearTerm> card;
    std::vector<LinearTerm> mass;
    for (std::size_t i = 0; i < S; ++i) {
      card.push_back({x_var(i, c), 1});
      if (model.small_sizes()[i] != 0) mass.push_back({x_var(i, c), model.small_sizes()[i]});
    }
    card.push_back({y_var(c), -Rational(static_cast<long>(model.k()) - configs[c].parts())});
    mass.push_back({y_var(c), -Rational(configs[c].gamma + 1) * grid});
    lp.add_constraint(std::move(card), RowSense::LessEqual, 0);
    lp.add_constraint(std::move(mass), RowSense::LessEqual, 0);
  }

  std::vector<IntegerVariable> integers;
  for (std::size_t c = 0; c < C; ++c) {
    integers.push_back({y_var(c), static_cast<std::int64_t>(model.bins())});
  }
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    for (std::size_t p = 0; p < patterns[l].size(); ++p) {
      integers.push_back({z_first[l] + p, static_cast<std::int64_t>(model.large_classes()[l].items.size())});
    }
  }

  const auto bnb = branch_and_bound(lp, integers, options.node_limit);
  outcome.status = bnb.status;
  outcome.nodes = bnb.nodes;
  outcome.lp_solves = bnb.lp_solves;
  if (bnb.status == SolveStatus::Unknown) outcome.note = "node limit reached";
  if (bnb.status != SolveStatus::Feasible) return outcome;

  MilpSolution sol;
  for (std::size_t c = 0; c < C; ++c) {
    const Rational& y = bnb.values[y_var(c)];
    bool any_share = false;
    for (std::size_t i = 0; i < S; ++i) any_share = any_share || bnb.values[x_var(i, c)] != 0;
    if (y == 0 && !any_share) continue;
    ConfigurationUse use{configs[c], to_int64(y), {}};
    for (std::size_t i = 0; i < S; ++i) use.small_share.push_back(bnb.values[x_var(i, c)]);
    sol.configurations.push_back(std::move(use));
  }
  for (std::size_t l = 0; l < patterns.size(); ++l) {
    for (std::size_t p = 0; p < patterns[l].size(); ++p) {
      const Rational& z = bnb.values[z_first[l] + p];
      if (z != 0) sol.patterns.push_back(PatternUse{patterns[l][p], to_int64(z)});
    }
  }
  sol.derive_parts(model.units());
  outcome.solution = std::move(sol);
  return outcome;
}

}  // namespace

SolveOutcome solve_milp(const MilpModel& model, const SolveOptions& options) {
  SolveOutcome outcome = options.strategy == SolverStrategy::LpBranchAndBound
                             ? solve_by_lp_branch_and_bound(model, options)
                             : solve_decomposed(model, options);
  if (outcome.solution) {
    const auto problems = model.violations(*outcome.solution);
    if (!problems.empty()) {
      throw InternalError("solver returned a solution violating the model: " + problems.front());
    }
  }
  return outcome;
}

}  // namespace dsbp
