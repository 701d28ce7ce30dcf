#pragma once

#include "dsbp/milp_solver.hpp"

namespace dsbp {

SolveOutcome solve_decomposed(const MilpModel& model, const SolveOptions& options);

}  // namespace dsbp
