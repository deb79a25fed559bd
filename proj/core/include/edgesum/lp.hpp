#pragma once

// Exact rational linear feasibility: decides whether a system of <=
// constraints over free rational variables has a solution, and produces a
// witness when it does. Used as the drop-in certificate engine behind the
// nonnegative-sum oracles; every answer is exact (no floating point).

#include <cstddef>
#include <vector>

#include "edgesum/rational.hpp"

namespace edgesum {

/// Outcome of an exact feasibility question.
struct LpResult {
  bool feasible = false;
  /// One satisfying assignment (size nvars) when feasible, empty otherwise.
  std::vector<Rat> witness;
  /// Simplex pivots performed (diagnostic).
  long long pivots = 0;
};

/// Decides exactly whether { x in Q^nvars : rows[r] . x <= rhs[r] for all r }
/// is nonempty. Variables are free (unrestricted in sign). Every row must
/// have exactly nvars coefficients. Runs a phase-one simplex with Bland's
/// rule on split variables, so it terminates on every input.
LpResult solve_le_feasibility(std::size_t nvars, const std::vector<std::vector<Rat>>& rows,
                              const std::vector<Rat>& rhs);

}  // namespace edgesum
