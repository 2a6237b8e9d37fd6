#pragma once

#include <array>
#include <tuple>

#include "degenum/graph.hpp"

namespace degenum {

/// Exact cover by 3-sets: ground set {0..n-1}, m candidate 3-subsets.
struct X3CInstance {
    int n;
    std::vector<std::array<int, 3>> subsets;
};

void validate(const X3CInstance& inst);

/// f(0) = n-1, f(3) = n, 0 otherwise: any nonempty subgraph with all
/// degrees in {0,3} scores at least n^2-n+1, anything else at most n^2-n.
ObjectiveVector cubic_objective(int n);

/// Decides existence of a nonempty subgraph with every degree 0 or 3, via
/// brute-force optimization of cubic_objective. |E(H)| <= 25.
bool decide_cubic_subgraph(const Graph& h);

/// Membership bigraph (subset u_i adjacent to its elements) with
/// f(x) = x(x-3) on left degrees and g(x) = -(x-1)^2 on right degrees; the
/// optimum is 0 exactly when some subsets partition the ground set.
std::tuple<BipartiteGraph, ObjectiveVector, ObjectiveVector> x3c_to_bipartite(
    const X3CInstance& inst);

/// Brute-force decision through the reduction; requires 3m <= 25.
bool decide_x3c(const X3CInstance& inst);

}  // namespace degenum
