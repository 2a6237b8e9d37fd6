#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degenum/graph.hpp"
#include "degenum/rational.hpp"

namespace degenum {

/// Duplicate-free list of integer points of one dimension, kept in
/// lexicographic order.
struct PointSet {
    int dim = 0;
    std::vector<std::vector<int>> points;

    bool contains(const std::vector<int>& p) const;
};

PointSet make_point_set(int dim, std::vector<std::vector<int>> points);

/// All distinct degree enumerators over the 2^|E| edge-subset subgraphs of
/// H. |E(H)| <= 28 so that complete graphs through K_8 fit.
PointSet enumerate_enumerators(const Graph& h);

/// All distinct bi-enumerators (flattened a then c, length n+1+m+1).
PointSet enumerate_bi_enumerators(const BipartiteGraph& h);

/// Result of the exact extreme-point test: when p is a vertex of conv(S),
/// `separator` satisfies separator.p > separator.q for every other q in S;
/// otherwise `combination` lists convex coefficients over indices of S
/// (excluding p itself) reproducing p.
struct VertexCheck {
    bool vertex = false;
    std::vector<Rational> separator;
    std::vector<std::pair<std::size_t, Rational>> combination;
};

VertexCheck check_vertex(const std::vector<int>& p, const PointSet& s);

/// True iff p is not a convex combination of S \ {p}; exact rational LP.
bool is_vertex(const std::vector<int>& p, const PointSet& s);

/// The subset of S passing is_vertex. |S| <= 2000, dim <= 16. Per-point
/// tests are independent; `jobs` > 1 runs them on worker threads with a
/// deterministic result.
PointSet extremal_set(const PointSet& s, int jobs = 1);

/// The point strictly maximizing w.p over S, or nullopt on a tie.
std::optional<std::vector<int>> unique_maximizer(const std::vector<long long>& w,
                                                 const PointSet& s);

/// Clears denominators and common factors; entries must fit in long long.
std::vector<long long> scale_to_integer(const std::vector<Rational>& v);

/// Exact rank test: are the points affinely independent?
bool affinely_independent(const PointSet& s);

/// Comparison of a closed-form vertex list against the brute-force oracle.
struct TheoremReport {
    std::string theorem;
    int expected_count = 0;
    int oracle_count = 0;
    std::vector<std::vector<int>> missing;  // expected but not found extremal
    std::vector<std::vector<int>> extra;    // extremal but not expected
    bool match = false;
};

/// extremal_set(enumerate_enumerators(K_n)) vs vertices_complete(n); n <= 8.
TheoremReport verify_theorem_complete(int n, int jobs = 1);

/// extremal_set(enumerate_bi_enumerators(K_{2,n})) vs vertices_b2(n); n <= 7.
TheoremReport verify_theorem_b2(int n, int jobs = 1);

}  // namespace degenum
