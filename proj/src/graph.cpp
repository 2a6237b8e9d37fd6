#include "degenum/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace degenum {

namespace {

constexpr int kMaxObjectiveVertices = 10000;
constexpr long long kMaxObjectiveEntry = 1LL << 31;

void check_objective(const ObjectiveVector& f, std::size_t expected_len, int vertex_total,
                     const char* what) {
    if (f.size() != expected_len)
        throw std::invalid_argument(std::string(what) + ": objective length " +
                                    std::to_string(f.size()) + ", expected " +
                                    std::to_string(expected_len));
    if (vertex_total > kMaxObjectiveVertices)
        throw std::invalid_argument(std::string(what) + ": more than 10^4 vertices");
    for (long long v : f)
        if (v > kMaxObjectiveEntry || v < -kMaxObjectiveEntry)
            throw std::invalid_argument(std::string(what) + ": |entry| exceeds 2^31");
}

}  // namespace

std::vector<int> BiEnumerator::flatten() const {
    std::vector<int> out;
    out.reserve(a.size() + c.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), c.begin(), c.end());
    return out;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw std::invalid_argument("Graph: edge endpoint out of range [0," +
                                        std::to_string(n_) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
}

BipartiteGraph::BipartiteGraph(int m, int n, std::vector<std::pair<int, int>> edges)
    : m_(m), n_(n), edges_(std::move(edges)) {
    if (m_ < 0 || n_ < 0) throw std::invalid_argument("BipartiteGraph: negative vertex count");
    for (auto [u, v] : edges_)
        if (u < 0 || u >= m_ || v < 0 || v >= n_)
            throw std::invalid_argument("BipartiteGraph: edge endpoint out of range");
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("BipartiteGraph: duplicate edge");
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

BipartiteGraph complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m) * n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) edges.emplace_back(u, v);
    return BipartiteGraph(m, n, std::move(edges));
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        ++d[u];
        ++d[v];
    }
    return d;
}

DegreeSequence degree_sequence(const BipartiteGraph& g) {
    DegreeSequence d(g.left_count() + g.right_count(), 0);
    for (auto [u, v] : g.edges()) {
        ++d[u];
        ++d[g.left_count() + v];
    }
    return d;
}

Enumerator degree_enumerator(const Graph& g) {
    Enumerator e(g.vertex_count(), 0);
    for (int deg : degree_sequence(g)) ++e[deg];
    return e;
}

BiEnumerator bi_enumerator(const BipartiteGraph& g) {
    BiEnumerator b{std::vector<int>(g.right_count() + 1, 0),
                   std::vector<int>(g.left_count() + 1, 0)};
    std::vector<int> left(g.left_count(), 0), right(g.right_count(), 0);
    for (auto [u, v] : g.edges()) {
        ++left[u];
        ++right[v];
    }
    for (int deg : left) ++b.a[deg];
    for (int deg : right) ++b.c[deg];
    return b;
}

long long objective_value(const ObjectiveVector& f, const Graph& g) {
    check_objective(f, static_cast<std::size_t>(g.vertex_count()), g.vertex_count(),
                    "objective_value");
    Enumerator e = degree_enumerator(g);
    long long via_enumerator = 0;
    for (std::size_t i = 0; i < f.size(); ++i) via_enumerator += f[i] * e[i];
    long long via_degrees = 0;
    for (int deg : degree_sequence(g)) via_degrees += f[deg];
    if (via_enumerator != via_degrees)
        throw std::logic_error("objective_value: enumerator and degree sums disagree");
    return via_enumerator;
}

long long bi_objective_value(const ObjectiveVector& f, const ObjectiveVector& g,
                             const BipartiteGraph& g2) {
    check_objective(f, static_cast<std::size_t>(g2.right_count()) + 1,
                    g2.left_count() + g2.right_count(), "bi_objective_value(f)");
    check_objective(g, static_cast<std::size_t>(g2.left_count()) + 1,
                    g2.left_count() + g2.right_count(), "bi_objective_value(g)");
    BiEnumerator b = bi_enumerator(g2);
    long long via_enumerator = 0;
    for (std::size_t i = 0; i < f.size(); ++i) via_enumerator += f[i] * b.a[i];
    for (std::size_t i = 0; i < g.size(); ++i) via_enumerator += g[i] * b.c[i];

    long long via_degrees = 0;
    DegreeSequence d = degree_sequence(g2);
    for (int u = 0; u < g2.left_count(); ++u) via_degrees += f[d[u]];
    for (int v = 0; v < g2.right_count(); ++v) via_degrees += g[d[g2.left_count() + v]];
    if (via_enumerator != via_degrees)
        throw std::logic_error("bi_objective_value: enumerator and degree sums disagree");
    return via_enumerator;
}

}  // namespace degenum
