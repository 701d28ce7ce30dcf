#include "dsbp/simplex.hpp"

#include <limits>

#include "dsbp/errors.hpp"

namespace dsbp {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "?";
}

void LinearProgram::add_constraint(std::vector<LinearTerm> terms, RowSense sense, Rational rhs) {
  for (const auto& t : terms) {
    if (t.var >= variables_) throw PreconditionError("constraint references unknown variable");
  }
  constraints_.push_back(LinearConstraint{std::move(terms), sense, std::move(rhs)});
}

void LinearProgram::set_objective(ObjectiveSense sense, std::vector<LinearTerm> terms) {
  for (const auto& t : terms) {
    if (t.var >= variables_) throw PreconditionError("objective references unknown variable");
  }
  objective_sense_ = sense;
  objective_ = std::move(terms);
}

bool LinearProgram::satisfied_by(const std::vector<Rational>& x) const {
  if (x.size() != variables_) return false;
  for (const auto& v : x) {
    if (v < 0) return false;
  }
  for (const auto& row : constraints_) {
    Rational lhs = 0;
    for (const auto& t : row.terms) lhs += t.coef * x[t.var];
    switch (row.sense) {
      case RowSense::LessEqual:
        if (lhs > row.rhs) return false;
        break;
      case RowSense::Equal:
        if (lhs != row.rhs) return false;
        break;
      case RowSense::GreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

Rational LinearProgram::objective_value(const std::vector<Rational>& x) const {
  Rational value = 0;
  for (const auto& t : objective_) value += t.coef * x.at(t.var);
  return value;
}

namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : structural_(lp.variables()) {
    const auto& rows = lp.constraints();
    const std::size_t m = rows.size();

    // Column layout: structural | slack/surplus | artificial.
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    std::vector<RowSense> senses(m);
    std::vector<bool> flip(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      RowSense s = rows[i].sense;
      if (rows[i].rhs < 0) {
        flip[i] = true;
        if (s == RowSense::LessEqual) {
          s = RowSense::GreaterEqual;
        } else if (s == RowSense::GreaterEqual) {
          s = RowSense::LessEqual;
        }
      }
      senses[i] = s;
      if (s != RowSense::Equal) ++slack_count;
      if (s != RowSense::LessEqual) ++artificial_count;
    }
    first_artificial_ = structural_ + slack_count;
    columns_ = first_artificial_ + artificial_count;

    a_.assign(m, std::vector<Rational>(columns_, 0));
    b_.assign(m, 0);
    basis_.assign(m, 0);

    std::size_t next_slack = structural_;
    std::size_t next_artificial = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational sign = flip[i] ? -1 : 1;
      for (const auto& t : rows[i].terms) a_[i][t.var] += sign * t.coef;
      b_[i] = sign * rows[i].rhs;
      switch (senses[i]) {
        case RowSense::LessEqual:
          a_[i][next_slack] = 1;
          basis_[i] = next_slack++;
          break;
        case RowSense::GreaterEqual:
          a_[i][next_slack++] = -1;
          a_[i][next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
        case RowSense::Equal:
          a_[i][next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
      }
    }
  }

  bool is_artificial(std::size_t col) const { return col >= first_artificial_; }
  std::size_t rows() const { return b_.size(); }

  /// Minimizes sum of artificials. Returns false when the LP is infeasible.
  bool phase_one() {
    std::vector<Rational> cost(columns_, 0);
    for (std::size_t j = first_artificial_; j < columns_; ++j) cost[j] = 1;
    load_objective(cost);
    run(/*allow_artificial=*/true);
    if (objective_ > 0) return false;
    drive_out_artificials();
    return true;
  }

  /// Minimizes `cost` over structural columns. Returns false if unbounded.
  bool phase_two(const std::vector<Rational>& structural_cost) {
    std::vector<Rational> cost(columns_, 0);
    for (std::size_t j = 0; j < structural_; ++j) cost[j] = structural_cost[j];
    load_objective(cost);
    return run(/*allow_artificial=*/false);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(structural_, 0);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = b_[i];
    }
    return x;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  void load_objective(const std::vector<Rational>& cost) {
    reduced_ = cost;
    objective_ = 0;
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      objective_ += cb * b_[i];
      for (std::size_t j = 0; j < columns_; ++j) {
        if (sgn(a_[i][j]) != 0) reduced_[j] -= cb * a_[i][j];
      }
    }
  }

  /// Returns false on unboundedness.
  bool run(bool allow_artificial) {
    bool bland = false;
    while (true) {
      std::size_t enter = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (sgn(reduced_[j]) >= 0) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (enter == columns_ || reduced_[j] < reduced_[enter]) enter = j;
      }
      if (enter == columns_) return true;

      std::size_t leave = rows();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (sgn(a_[i][enter]) <= 0) continue;
        Rational ratio = b_[i] / a_[i][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      if (sgn(best_ratio) == 0) bland = true;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots_;
    auto& row = a_[r];
    const Rational inv = 1 / row[c];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < columns_; ++j) {
      if (sgn(row[j]) != 0) {
        row[j] *= inv;
        nonzero.push_back(j);
      }
    }
    b_[r] *= inv;

    Rational tmp;
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == r || sgn(a_[i][c]) == 0) continue;
      const Rational factor = a_[i][c];
      auto& target = a_[i];
      for (std::size_t j : nonzero) {
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), row[j].get_mpq_t());
        mpq_sub(target[j].get_mpq_t(), target[j].get_mpq_t(), tmp.get_mpq_t());
      }
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), b_[r].get_mpq_t());
      mpq_sub(b_[i].get_mpq_t(), b_[i].get_mpq_t(), tmp.get_mpq_t());
    }
    if (sgn(reduced_[c]) != 0) {
      const Rational factor = reduced_[c];
      for (std::size_t j : nonzero) reduced_[j] -= factor * row[j];
      objective_ += factor * b_[r];
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (sgn(a_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
      // A row with no structural or slack entry left is redundant; its
      // artificial stays basic at zero and never re-enters.
    }
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpResult simplex_solve(const LinearProgram& lp) {
  Tableau tableau(lp);
  LpResult result;
  if (!tableau.phase_one()) {
    result.status = LpStatus::Infeasible;
    result.pivots = tableau.pivots();
    return result;
  }
  if (lp.objective_sense() != ObjectiveSense::Feasibility) {
    std::vector<Rational> cost(lp.variables(), 0);
    const Rational sign = lp.objective_sense() == ObjectiveSense::Maximize ? -1 : 1;
    for (const auto& t : lp.objective()) cost[t.var] += sign * t.coef;
    if (!tableau.phase_two(cost)) {
      result.status = LpStatus::Unbounded;
      result.pivots = tableau.pivots();
      return result;
    }
  }
  result.status = LpStatus::Optimal;
  result.values = tableau.solution();
  result.objective = lp.objective_value(result.values);
  result.pivots = tableau.pivots();
  return result;
}

}  // namespace dsbp
