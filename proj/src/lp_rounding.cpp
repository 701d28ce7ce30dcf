#include "dsbp/lp_rounding.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "dsbp/errors.hpp"
#include "dsbp/simplex.hpp"

namespace dsbp {

bool FractionalAssignment::usable(std::size_t i, std::size_t j) const {
  return !forbidden[i][j] && size[i][j] <= slack;
}

std::vector<std::string> FractionalAssignment::violations() const {
  std::vector<std::string> out;
  const std::size_t n = items();
  const std::size_t m = bins();
  if (size.size() != n || forbidden.size() != n) {
    out.push_back("size or mask matrix has the wrong number of rows");
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].size() != m || size[i].size() != m || forbidden[i].size() != m) {
      out.push_back("row " + std::to_string(i) + " has the wrong number of bins");
      return out;
    }
  }
  std::vector<Size> load(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& v = x[i][j];
      if (v < 0) out.push_back("negative entry at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      if (v != 0 && !usable(i, j)) {
        out.push_back("item " + std::to_string(i) + " uses bin " + std::to_string(j) +
                      " where it is forbidden or larger than g");
      }
      row += v;
      if (v != 0 && !forbidden[i][j]) load[j] += size[i][j] * v;
    }
    if (row != 1) out.push_back("row " + std::to_string(i) + " sums to " + to_string(row));
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (load[j] > capacity[j]) {
      out.push_back("bin " + std::to_string(j) + " load " + to_string(load[j]) + " exceeds " +
                    to_string(capacity[j]));
    }
  }
  return out;
}

namespace {

// Rounds a fractional vertex whose support graph has at most one cycle per
// component: bins of degree one take their item, and what remains is a union
// of even cycles, rounded along alternate edges.
void round_pseudo_forest(std::vector<std::vector<std::size_t>>& item_bins, std::size_t bins,
                         IntegralAssignment& assignment) {
  const std::size_t n = item_bins.size();
  std::vector<std::set<std::size_t>> bin_items(bins);
  std::vector<bool> open(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (item_bins[i].empty()) continue;
    open[i] = true;
    for (std::size_t j : item_bins[i]) bin_items[j].insert(i);
  }

  std::deque<std::size_t> leaves;
  for (std::size_t j = 0; j < bins; ++j) {
    if (bin_items[j].size() == 1) leaves.push_back(j);
  }
  auto close = [&](std::size_t i, std::size_t j) {
    assignment[i] = j;
    open[i] = false;
    for (std::size_t other : item_bins[i]) {
      bin_items[other].erase(i);
      if (other != j && bin_items[other].size() == 1) leaves.push_back(other);
    }
  };
  while (!leaves.empty()) {
    const std::size_t j = leaves.front();
    leaves.pop_front();
    if (bin_items[j].size() != 1) continue;
    close(*bin_items[j].begin(), j);
  }

  for (std::size_t start = 0; start < n; ++start) {
    if (!open[start]) continue;
    std::size_t i = start;
    std::size_t previous = bins;
    do {
      std::size_t next_bin = bins;
      std::size_t degree = 0;
      for (std::size_t j : item_bins[i]) {
        if (bin_items[j].count(i) == 0) continue;
        ++degree;
        if (j != previous && next_bin == bins) next_bin = j;
      }
      if (degree != 2 || bin_items[next_bin].size() != 2) {
        throw InternalError("fractional support is not a union of cycles after leaf removal");
      }
      std::size_t next_item = *bin_items[next_bin].begin();
      if (next_item == i) next_item = *std::next(bin_items[next_bin].begin());
      assignment[i] = next_bin;
      open[i] = false;
      previous = next_bin;
      i = next_item;
    } while (i != start);
    // Detach the cycle.
    for (std::size_t t = 0; t < n; ++t) {
      if (open[t] || assignment[t] == bins) continue;
      for (std::size_t j : item_bins[t]) bin_items[j].erase(t);
    }
  }
}

}  // namespace

IntegralAssignment lst_round(const FractionalAssignment& fa) {
  const auto problems = fa.violations();
  if (!problems.empty()) throw PreconditionError("assignment LP violated: " + problems.front());
  const std::size_t n = fa.items();
  const std::size_t m = fa.bins();
  IntegralAssignment assignment(n, m);

  std::vector<Size> fixed_load(m, 0);
  std::vector<std::size_t> fractional;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (fa.x[i][j] == 1) {
        assignment[i] = j;
        fixed_load[j] += fa.size[i][j];
      }
    }
    if (assignment[i] == m) fractional.push_back(i);
  }

  if (!fractional.empty()) {
    // Re-solve on the fractional items to reach a vertex of the restricted LP.
    struct Var {
      std::size_t item;
      std::size_t bin;
    };
    std::vector<Var> vars;
    std::vector<std::vector<LinearTerm>> bin_rows(m);
    LinearProgram lp;
    for (std::size_t i : fractional) {
      std::vector<LinearTerm> row;
      for (std::size_t j = 0; j < m; ++j) {
        if (fa.x[i][j] == 0) continue;
        const std::size_t v = lp.add_variable();
        vars.push_back({i, j});
        row.push_back({v, 1});
        if (fa.size[i][j] != 0) bin_rows[j].push_back({v, fa.size[i][j]});
      }
      lp.add_constraint(std::move(row), RowSense::Equal, 1);
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (!bin_rows[j].empty()) {
        lp.add_constraint(std::move(bin_rows[j]), RowSense::LessEqual, fa.capacity[j] - fixed_load[j]);
      }
    }
    const LpResult vertex = simplex_solve(lp);
    if (vertex.status != LpStatus::Optimal) {
      throw InternalError("restricted assignment LP has no solution although its input does");
    }

    std::vector<std::vector<std::size_t>> item_bins(n);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const Rational& value = vertex.values[v];
      if (value == 1) {
        assignment[vars[v].item] = vars[v].bin;
      } else if (value > 0) {
        item_bins[vars[v].item].push_back(vars[v].bin);
      }
    }
    for (std::size_t i : fractional) {
      if (assignment[i] != m) item_bins[i].clear();
    }
    round_pseudo_forest(item_bins, m, assignment);
  }

  std::vector<Size> load(m, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = assignment[i];
    if (j >= m || fa.x[i][j] == 0) throw InternalError("rounded item left its fractional support");
    load[j] += fa.size[i][j];
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (load[j] > fa.capacity[j] + fa.slack) {
      throw InternalError("rounded load of bin " + std::to_string(j) + " exceeds G_j + g");
    }
  }
  return assignment;
}

Packing nice_packing(const Packing& pack, const RoundedInstance& ri) {
  const Instance inst = ri.instance();
  const auto report = verify_packing(inst, pack);
  if (!report.feasible) throw PreconditionError("packing is not feasible: " + report.violations.front());

  const std::size_t m = pack.bins();
  const Rational grid = ri.eps.squared();
  const Rational& eps = ri.eps.value();

  FractionalAssignment fa;
  fa.capacity.assign(m, 0);
  fa.slack = grid;
  struct Unit {
    ItemId item;
  };
  std::vector<Unit> units;
  Packing out(m);

  for (ItemId t = 0; t < inst.size(); ++t) {
    const Size& size = inst.item(t);
    if (size < eps) {
      for (BinId b = 0; b < m; ++b) {
        for (const auto& p : pack.bin(b)) {
          if (p.item == t) out.add(b, t, p.size);
        }
      }
      continue;
    }
    const Rational alpha_q = size / grid;
    if (!is_integer(alpha_q)) throw PreconditionError("large item is not a multiple of eps^2");
    const std::int64_t alpha = to_int64(alpha_q);

    // Parts in bin order, laid end to end in units of eps^2.
    std::vector<std::pair<BinId, Rational>> parts;
    for (BinId b = 0; b < m; ++b) {
      const Size s = pack.part(b, t);
      if (s > 0) {
        parts.emplace_back(b, s / grid);
        fa.capacity[b] += s;
      }
    }
    std::vector<bool> allowed(m, false);
    for (const auto& [b, len] : parts) allowed[b] = true;

    std::size_t p = 0;
    Rational part_start = 0;
    for (std::int64_t u = 0; u < alpha; ++u) {
      std::vector<Rational> row(m, 0);
      const Rational lo(u);
      const Rational hi(u + 1);
      while (p < parts.size() && part_start + parts[p].second <= lo) {
        part_start += parts[p].second;
        ++p;
      }
      std::size_t q = p;
      Rational q_start = part_start;
      while (q < parts.size() && q_start < hi) {
        const Rational q_end = q_start + parts[q].second;
        const Rational overlap = std::min(hi, q_end) - std::max(lo, q_start);
        if (overlap > 0) row[parts[q].first] += overlap;
        q_start = q_end;
        ++q;
      }
      units.push_back({t});
      fa.x.push_back(std::move(row));
      fa.size.emplace_back(m, grid);
      std::vector<bool> mask(m);
      for (BinId b = 0; b < m; ++b) mask[b] = !allowed[b];
      fa.forbidden.push_back(std::move(mask));
    }
  }

  const IntegralAssignment assignment = lst_round(fa);
  for (std::size_t u = 0; u < units.size(); ++u) out.add(assignment[u], units[u].item, grid);
  return out;
}

IntegralAssignment best_fit_integralize(const std::vector<Size>& sizes,
                                        const std::vector<Size>& budgets,
                                        const std::vector<std::int64_t>& slots,
                                        const std::vector<std::vector<Rational>>& x) {
  const std::size_t n = sizes.size();
  const std::size_t m = budgets.size();
  if (slots.size() != m || x.size() != n) throw PreconditionError("best-fit input has mismatched dimensions");
  {
    std::vector<Rational> count(m, 0);
    std::vector<Size> load(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].size() != m) throw PreconditionError("best-fit row has the wrong number of bins");
      if (sizes[i] < 0) throw PreconditionError("negative item size");
      Rational row = 0;
      for (std::size_t b = 0; b < m; ++b) {
        if (x[i][b] < 0) throw PreconditionError("negative fractional share");
        row += x[i][b];
        count[b] += x[i][b];
        load[b] += sizes[i] * x[i][b];
      }
      if (row != 1) throw PreconditionError("item " + std::to_string(i) + " is not fully assigned");
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (count[b] > slots[b]) throw PreconditionError("fractional count exceeds slots in bin " + std::to_string(b));
      if (load[b] > budgets[b]) throw PreconditionError("fractional load exceeds budget in bin " + std::to_string(b));
    }
  }

  // An integral x already meets the contract.
  {
    IntegralAssignment direct(n, m);
    bool integral = true;
    for (std::size_t i = 0; i < n && integral; ++i) {
      for (std::size_t b = 0; b < m; ++b) {
        if (x[i][b] == 1) direct[i] = b;
        else if (x[i][b] != 0) integral = false;
      }
    }
    if (integral) return direct;
  }

  Size largest = 0;
  for (const auto& s : sizes) largest = std::max(largest, s);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  IntegralAssignment assignment(n, m);
  std::vector<Size> load(m, 0);
  std::vector<std::int64_t> used(m, 0);
  for (std::size_t i : order) {
    std::size_t best = m;
    Rational best_room;
    for (std::size_t b = 0; b < m; ++b) {
      if (used[b] >= slots[b]) continue;
      Rational room = budgets[b] + largest - load[b];
      if (best == m || room > best_room) {
        best = b;
        best_room = std::move(room);
      }
    }
    if (best == m) throw InternalError("best-fit ran out of slots");
    assignment[i] = best;
    load[best] += sizes[i];
    ++used[best];
  }
  for (std::size_t b = 0; b < m; ++b) {
    if (load[b] > budgets[b] + largest) {
      throw InternalError("best-fit load in bin " + std::to_string(b) + " exceeds t_b + S_max");
    }
  }
  return assignment;
}

}  // namespace dsbp
