#pragma once

#include "degenum/graph.hpp"

namespace degenum {

/// Target for an r-regular graph on n vertices. Invalid when n and r are
/// both odd (the degree sum nr would be odd).
struct RegularSpec {
    int n;
    int r;
};

/// Target for a near-regular graph on odd n: vertex n-1 gets even degree s,
/// every other vertex gets odd degree r, 0 < r < n-1.
struct NearRegularSpec {
    int n;
    int r;
    int s;
};

/// Target for a (2,n)-graph with left degrees i <= j whose neighborhoods
/// intersect in exactly k right vertices.
struct BipartiteSpec {
    int n;
    int i;
    int j;
    int k;
};

void validate(const RegularSpec& spec);
void validate(const NearRegularSpec& spec);
void validate(const BipartiteSpec& spec);

/// Circulant construction: for even r each vertex is joined to the r/2
/// nearest vertices on each side of the circle; for odd r (even n only) the
/// perfect matching {i, n/2+i} is added on top of the (r-1)-regular graph.
Graph build_regular(const RegularSpec& spec);

/// Starts from the (n-1)-vertex regular graph, reroutes s/2 matching edges
/// {i, (n-1)/2+i} through the extra vertex n-1. For s = 0 vertex n-1 stays
/// isolated.
Graph build_near_regular(const NearRegularSpec& spec);

/// Left neighborhoods N_1 = {0..i-1} and N_2 = {i-k..i-k+j-1}; the window
/// overlaps N_1 in exactly k vertices and stays in range because
/// i+j-k <= n. Bi-enumerator: (1_i + 1_j) + (n-(i+j)+k, (i+j)-2k, k).
BipartiteGraph build_bipartite_2n(const BipartiteSpec& spec);

/// Graph on 2k+1 vertices whose enumerator prefix (e_0,...,e_{k-1}) encodes
/// the gaps of the chosen sequence 1 <= s_1 < ... < s_k <= 2k. Odd labels
/// form the low-degree side L, even labels carry a clique; each block L_i
/// (of size s_{i+1}-s_i-1) connects to the i smallest even labels.
Graph build_prop23_graph(int k, const std::vector<int>& s);

}  // namespace degenum
