#pragma once

#include <vector>

#include "semiq/rational.hpp"

namespace semiq {

enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;  // optimal objective value when status == Optimal
};

/// Optimizes c.w over {w >= 0 : A w = b} with exact rational arithmetic
/// (two-phase simplex, Bland's rule).
LpResult lp_solve(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c, bool maximize);

/// True iff {w >= 0 : A w = b} is nonempty.
bool lp_feasible(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b);

}  // namespace semiq
