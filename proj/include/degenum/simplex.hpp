#pragma once

#include <vector>

#include "degenum/rational.hpp"

namespace degenum {

/// Outcome of the exact feasibility check for {x >= 0 : Ax = b}. When
/// feasible, `solution` holds one such x. When infeasible, `farkas` holds y
/// with y.A <= 0 (componentwise over columns) and y.b > 0.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> solution;
    std::vector<Rational> farkas;
};

/// Phase-1 simplex over exact rationals with Bland's anti-cycling rule.
/// A is row-major, m x n; b has length m.
FeasibilityResult solve_equality_feasibility(std::vector<std::vector<Rational>> A,
                                             std::vector<Rational> b);

}  // namespace degenum
