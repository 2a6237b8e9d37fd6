#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "degenum/graph.hpp"
#include "degenum/rational.hpp"

namespace degenum {

/// A vertex of the degree enumerator polytope of K_n together with the
/// graph realizing it: n.1_r for r-regular points, (n-1).1_r + 1_s for the
/// near-regular points of odd n (s is set exactly in that case).
struct EnumeratorVertex {
    Enumerator point;
    int r;
    std::optional<int> s;
    Graph witness;
};

/// A bi-enumerator b_n(i,j,k) of K_{2,n} with its witness graph.
struct BiEnumeratorVertex {
    BiEnumerator point;
    int i;
    int j;
    int k;
    BipartiteGraph witness;
};

/// A point 1_k + (n-k, k) of the (simplex) polytope of K_{1,n}.
struct B1Vertex {
    BiEnumerator point;
    int k;
    BipartiteGraph witness;
};

/// Objective vector certifying a vertex of the enumerator polytope of K_n:
/// the target is the strict unique maximizer of f.e over all enumerators.
struct CompleteCertificate {
    ObjectiveVector f;
    Enumerator target;
    int r;
    std::optional<int> s;
};

/// Objective pair certifying a vertex of the bi-enumerator polytope of
/// K_{2,n}.
struct B2Certificate {
    ObjectiveVector f;  // length n+1
    ObjectiveVector g;  // length 3
    BiEnumerator target;
    int i;
    int j;
    int k;
};

/// All vertices of the enumerator polytope of K_n, regular points first by
/// r ascending, then near-regular points by (r,s) lexicographic.
std::vector<EnumeratorVertex> vertices_complete(int n);

/// Same points without the witness graphs (cheap for large n).
std::vector<Enumerator> vertices_complete_points(int n);

/// n for even n, ((n+1)/2)^2 for odd n.
long long vertex_count_complete(int n);

/// f = 1_r for the regular vertices, f = 2.1_r + 1_s for near-regular ones.
CompleteCertificate certificate_complete(int n, int r, std::optional<int> s = std::nullopt);

/// The n+1 points 1_k + (n-k, k), k = 0..n; they are affinely independent
/// (their left blocks are distinct unit vectors), so the hull is a simplex.
std::vector<B1Vertex> vertices_b1(int n);

/// Every bi-enumerator of a subgraph of K_{2,n}: b_n(i,j,k) over i = 0..n,
/// j = i..n, k = max{0,(i+j)-n}..i, in that loop order.
std::vector<BiEnumeratorVertex> all_bi_enumerators_2n(int n);

/// (n+2)(n+4)(2n+3)/24 for even n, (n+1)(n+3)(2n+7)/24 for odd n.
long long bi_enumerator_count_2n(int n);

/// Vertices of the bi-enumerator polytope of K_{2,n}: the k-extremes of the
/// equal-degree points b_n(i,i,k), then the minimum-intersection points
/// b_n(i,j,max{0,(i+j)-n}) for i <= floor((n-1)/2) < ceil((n+1)/2) <= j.
std::vector<BiEnumeratorVertex> vertices_b2(int n);

B2Certificate certificate_b2(int n, int i, int j, int k);

/// Express a non-vertex bi-enumerator of K_{2,n} as an exact convex
/// combination of other bi-enumerators (the midpoint identity for interior
/// k, otherwise one of the six case formulas for extreme k). Throws when
/// (i,j,k) is a vertex.
std::vector<std::pair<Rational, BiEnumerator>> convex_witness_b2(int n, int i, int j, int k);

/// b_n(i,j,k) as a point, without building the witness graph.
BiEnumerator bi_enumerator_point(int n, int i, int j, int k);

}  // namespace degenum
