#pragma once

#include "mms/rational.hpp"

#include <cstddef>
#include <vector>

namespace mms {

/// Outcome of deciding whether {x >= 0 : A x = b} is nonempty.
struct FeasibilityResult {
    bool feasible = false;
    /// A basic feasible x (size = columns), when feasible.
    std::vector<Rational> solution;
    /// When infeasible: y with yᵀA <= 0 componentwise and yᵀb > 0.
    std::vector<Rational> farkas;
    std::size_t pivots = 0;
};

/// Exact phase-one simplex with Bland's rule (lowest-index entering column,
/// lowest-index leaving basic variable on ratio ties), so it always terminates.
/// `rows` is dense, one vector per constraint, all of equal length.
FeasibilityResult solve_equality_feasibility(const std::vector<std::vector<Rational>>& rows,
                                             const std::vector<Rational>& rhs);

} // namespace mms
