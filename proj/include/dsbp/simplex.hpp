#pragma once

// Dense two-phase primal simplex over exact rationals.
//
// Variables are non-negative. Pivoting starts with Dantzig's rule and falls
// back to Bland's rule for the rest of the phase after the first degenerate
// pivot, which rules out cycling.

#include <cstddef>
#include <string>
#include <vector>

#include "dsbp/rational.hpp"

namespace dsbp {

enum class RowSense { LessEqual, Equal, GreaterEqual };
enum class ObjectiveSense { Feasibility, Maximize, Minimize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LinearTerm {
  std::size_t var;
  Rational coef;
};

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  RowSense sense;
  Rational rhs;
};

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables = 0) : variables_(variables) {}

  std::size_t add_variable() { return variables_++; }
  std::size_t variables() const { return variables_; }

  void add_constraint(std::vector<LinearTerm> terms, RowSense sense, Rational rhs);
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  void set_objective(ObjectiveSense sense, std::vector<LinearTerm> terms);
  ObjectiveSense objective_sense() const { return objective_sense_; }
  const std::vector<LinearTerm>& objective() const { return objective_; }

  /// Exact check of every row and non-negativity.
  bool satisfied_by(const std::vector<Rational>& x) const;
  Rational objective_value(const std::vector<Rational>& x) const;

 private:
  std::size_t variables_;
  std::vector<LinearConstraint> constraints_;
  ObjectiveSense objective_sense_ = ObjectiveSense::Feasibility;
  std::vector<LinearTerm> objective_;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;  ///< a vertex when status == Optimal
  Rational objective;
  std::size_t pivots = 0;
};

LpResult simplex_solve(const LinearProgram& lp);

}  // namespace dsbp
