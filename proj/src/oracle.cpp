#include "dsbp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "dsbp/errors.hpp"
#include "dsbp/simplex.hpp"

namespace dsbp {
namespace {

using Mask = std::uint32_t;

struct SupportLp {
  Size value;
  std::vector<Rational> flow;  // per (bin, item in mask) in mask order
};

std::optional<SupportLp> solve_support(const Instance& inst, const std::vector<Mask>& support) {
  const std::size_t n = inst.size();
  LinearProgram lp;
  std::vector<std::vector<LinearTerm>> item_rows(n);
  std::vector<std::vector<LinearTerm>> bin_rows(support.size());
  for (std::size_t b = 0; b < support.size(); ++b) {
    for (std::size_t t = 0; t < n; ++t) {
      if ((support[b] >> t & 1U) == 0) continue;
      const std::size_t v = lp.add_variable();
      item_rows[t].push_back({v, 1});
      bin_rows[b].push_back({v, 1});
    }
  }
  const std::size_t flows = lp.variables();
  const std::size_t cmax = lp.add_variable();
  for (std::size_t t = 0; t < n; ++t) lp.add_constraint(std::move(item_rows[t]), RowSense::Equal, inst.item(t));
  for (auto& row : bin_rows) {
    row.push_back({cmax, -1});
    lp.add_constraint(std::move(row), RowSense::LessEqual, 0);
  }
  lp.set_objective(ObjectiveSense::Minimize, {{cmax, 1}});
  const LpResult res = simplex_solve(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  SupportLp out;
  out.value = res.values[cmax];
  out.flow.assign(res.values.begin(), res.values.begin() + static_cast<std::ptrdiff_t>(flows));
  return out;
}

Packing packing_from_support(const Instance& inst, const std::vector<Mask>& support,
                             const std::vector<Rational>& flow) {
  Packing pack(support.size());
  std::vector<bool> placed(inst.size(), false);
  std::size_t v = 0;
  for (std::size_t b = 0; b < support.size(); ++b) {
    for (std::size_t t = 0; t < inst.size(); ++t) {
      if ((support[b] >> t & 1U) == 0) continue;
      const Rational& f = flow[v++];
      if (f > 0 || (inst.item(t) == 0 && !placed[t])) {
        pack.add(b, t, f);
        placed[t] = true;
      }
    }
  }
  return pack;
}

}  // namespace

std::optional<OracleResult> exact_opt(const Instance& inst, const OracleOptions& options) {
  const std::size_t n = inst.size();
  const std::size_t m = inst.bins();
  if (n * m > options.max_cells) {
    throw ResourceLimit("exact oracle refuses n*m = " + std::to_string(n * m) + " above " +
                        std::to_string(options.max_cells));
  }
  if (!check_feasible(inst)) return std::nullopt;
  if (n == 0) return OracleResult{0, Packing(m), 0};

  const std::size_t width = std::min(inst.k(), n);
  std::vector<Mask> masks;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    const auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (options.maximal_supports_only ? bits == width : bits <= width) masks.push_back(mask);
  }
  const Mask everyone = (Mask{1} << n) - 1;
  const Size floor_value = lower_bound(inst);

  std::optional<OracleResult> best;
  std::size_t solved = 0;
  std::vector<std::size_t> pick(m, 0);
  std::vector<Mask> support(m);
  // Multisets of m masks as non-decreasing index sequences.
  while (true) {
    Mask covered = 0;
    for (std::size_t b = 0; b < m; ++b) {
      support[b] = masks[pick[b]];
      covered |= support[b];
    }
    if (covered == everyone) {
      // Cheap bound: an item spread over d bins puts S_t / d in one of them.
      Size bound = floor_value;
      for (std::size_t t = 0; t < n; ++t) {
        long d = 0;
        for (Mask s : support) d += (s >> t & 1U);
        bound = std::max(bound, Size(inst.item(t) / d));
      }
      if (!best || bound < best->value) {
        ++solved;
        auto lp = solve_support(inst, support);
        if (lp && (!best || lp->value < best->value)) {
          best = OracleResult{lp->value, packing_from_support(inst, support, lp->flow), 0};
          if (best->value == floor_value) break;
        }
      }
    }
    std::size_t pos = m;
    while (pos > 0 && pick[pos - 1] + 1 == masks.size()) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t b = pos; b < m; ++b) pick[b] = pick[pos - 1];
  }
  if (best) best->supports = solved;
  return best;
}

}  // namespace dsbp
