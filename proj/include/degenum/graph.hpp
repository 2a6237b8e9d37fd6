#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace degenum {

using DegreeSequence = std::vector<int>;
using Enumerator = std::vector<int>;       // entry i counts vertices of degree i
using ObjectiveVector = std::vector<long long>;

/// Left/right degree enumerators of a bipartite graph: a has length n+1
/// (left degrees range over 0..n), c has length m+1.
struct BiEnumerator {
    std::vector<int> a;
    std::vector<int> c;

    std::vector<int> flatten() const;
    bool operator==(const BiEnumerator&) const = default;
};

/// Simple graph on vertices {0,...,n-1}. Edges are stored normalized
/// (min,max) and sorted; construction rejects self-loops, duplicates and
/// out-of-range endpoints.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// Bipartite graph with left vertices {0,...,m-1} and right vertices
/// {0,...,n-1}; edges are (left,right) pairs, sorted lexicographically.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(int m, int n, std::vector<std::pair<int, int>> edges);

    int left_count() const { return m_; }
    int right_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool operator==(const BipartiteGraph&) const = default;

private:
    int m_ = 0;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

Graph complete_graph(int n);
BipartiteGraph complete_bipartite(int m, int n);

DegreeSequence degree_sequence(const Graph& g);
/// Left degrees followed by right degrees (length m+n).
DegreeSequence degree_sequence(const BipartiteGraph& g);

Enumerator degree_enumerator(const Graph& g);
BiEnumerator bi_enumerator(const BipartiteGraph& g);

/// f.e(G), cross-checked against the direct sum of f over vertex degrees.
/// Exact for n <= 10^4 and |f_i| <= 2^31; larger inputs are rejected.
long long objective_value(const ObjectiveVector& f, const Graph& g);

/// f.a(G) + g.c(G) with |f| = n+1 and |g| = m+1.
long long bi_objective_value(const ObjectiveVector& f, const ObjectiveVector& g,
                             const BipartiteGraph& g2);

}  // namespace degenum
