#include "degenum/optimize.hpp"

#include <stdexcept>
#include <string>

#include "degenum/constructions.hpp"
#include "degenum/subset_scan.hpp"

namespace degenum {

namespace {

constexpr int kBruteForceEdgeLimit = 25;

void require_length(const ObjectiveVector& f, std::size_t len, const char* what) {
    if (f.size() != len)
        throw std::invalid_argument(std::string(what) + ": objective length " +
                                    std::to_string(f.size()) + ", expected " +
                                    std::to_string(len));
}

long long dot_point(const ObjectiveVector& f, const std::vector<int>& p) {
    long long v = 0;
    for (std::size_t t = 0; t < p.size(); ++t) v += f[t] * p[t];
    return v;
}

// Scans all edge subsets of `edges`, keeping the best objective value under
// the incremental per-vertex update `delta(vertex, new_degree, old_degree)`.
template <typename EdgeVec, typename Value>
std::uint64_t best_subset(const EdgeVec& edges, Value initial,
                          std::vector<int>& degrees_left, std::vector<int>* degrees_right,
                          const ObjectiveVector& f, const ObjectiveVector& g, Value& best_value) {
    long long value = initial;
    best_value = initial;
    std::uint64_t best_counter = 0;
    std::uint64_t mask = 0;
    std::uint64_t counter = 0;
    gray_scan(static_cast<int>(edges.size()), [&](int bit) {
        ++counter;
        auto [u, v] = edges[bit];
        const int step = (mask >> bit & 1) ? -1 : 1;
        mask ^= std::uint64_t(1) << bit;
        const int du = degrees_left[u] + step;
        value += f[du] - f[degrees_left[u]];
        degrees_left[u] = du;
        auto& rdeg = degrees_right ? *degrees_right : degrees_left;
        const ObjectiveVector& rf = degrees_right ? g : f;
        const int dv = rdeg[v] + step;
        value += rf[dv] - rf[rdeg[v]];
        rdeg[v] = dv;
        if (value > best_value) {
            best_value = value;
            best_counter = counter;
        }
    });
    return best_counter;
}

std::vector<std::pair<int, int>> subset_edges(const std::vector<std::pair<int, int>>& edges,
                                              std::uint64_t counter) {
    std::uint64_t mask = gray_code(counter);
    std::vector<std::pair<int, int>> out;
    for (std::size_t bit = 0; bit < edges.size(); ++bit)
        if (mask >> bit & 1) out.push_back(edges[bit]);
    return out;
}

}  // namespace

CompleteOpt optimize_complete(int n, const ObjectiveVector& f) {
    if (n < 1) throw std::invalid_argument("optimize_complete: n must be positive");
    require_length(f, static_cast<std::size_t>(n), "optimize_complete");
    int r = 0, s = 0;
    for (int t = 1; t < n; ++t)
        if (f[t] > f[r]) r = t;
    for (int t = 2; t < n; t += 2)
        if (f[t] > f[s]) s = t;

    CompleteOpt result{0, Graph{}, 0, std::nullopt};
    if (n % 2 == 0) {
        result = {static_cast<long long>(n) * f[r], build_regular({n, r}), r, std::nullopt};
    } else if (f[s] == f[r]) {
        result = {static_cast<long long>(n) * f[s], build_regular({n, s}), s, std::nullopt};
    } else {
        result = {static_cast<long long>(n - 1) * f[r] + f[s], build_near_regular({n, r, s}), r,
                  s};
    }
    if (objective_value(f, result.witness) != result.value)
        throw std::logic_error("optimize_complete: witness value mismatch");
    return result;
}

CompleteOpt optimize_complete_scan(int n, const ObjectiveVector& f) {
    if (n < 1) throw std::invalid_argument("optimize_complete_scan: n must be positive");
    require_length(f, static_cast<std::size_t>(n), "optimize_complete_scan");
    auto verts = vertices_complete(n);
    const EnumeratorVertex* best = nullptr;
    long long best_value = 0;
    for (const auto& v : verts) {
        long long value = dot_point(f, v.point);
        if (!best || value > best_value) {
            best = &v;
            best_value = value;
        }
    }
    return {best_value, best->witness, best->r, best->s};
}

K2nOpt optimize_k2n(int n, const ObjectiveVector& f, const ObjectiveVector& g) {
    if (n < 1) throw std::invalid_argument("optimize_k2n: n must be positive");
    require_length(f, static_cast<std::size_t>(n) + 1, "optimize_k2n(f)");
    require_length(g, 3, "optimize_k2n(g)");
    auto verts = vertices_b2(n);
    const BiEnumeratorVertex* best = nullptr;
    long long best_value = 0;
    for (const auto& v : verts) {
        long long value = dot_point(f, v.point.a) + dot_point(g, v.point.c);
        if (!best || value > best_value) {
            best = &v;
            best_value = value;
        }
    }
    K2nOpt result{best_value, best->witness, best->i, best->j, best->k};
    if (bi_objective_value(f, g, result.witness) != result.value)
        throw std::logic_error("optimize_k2n: witness value mismatch");
    return result;
}

SubgraphOpt brute_force_complete(int n, const ObjectiveVector& f) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("brute_force_complete: n must be in [1,8]");
    require_length(f, static_cast<std::size_t>(n), "brute_force_complete");
    Graph h = complete_graph(n);
    std::vector<int> degrees(n, 0);
    long long best_value = 0;
    std::uint64_t best_counter = best_subset(h.edges(), static_cast<long long>(n) * f[0],
                                             degrees, nullptr, f, f, best_value);
    SubgraphOpt result{best_value, Graph(n, subset_edges(h.edges(), best_counter))};
    if (objective_value(f, result.witness) != result.value)
        throw std::logic_error("brute_force_complete: witness value mismatch");
    return result;
}

SubgraphOpt brute_force_subgraph(const Graph& h, const ObjectiveVector& f) {
    if (h.edge_count() > kBruteForceEdgeLimit)
        throw std::invalid_argument("brute_force_subgraph: more than 25 edges");
    require_length(f, static_cast<std::size_t>(h.vertex_count()), "brute_force_subgraph");
    std::vector<int> degrees(h.vertex_count(), 0);
    long long best_value = 0;
    std::uint64_t best_counter =
        best_subset(h.edges(), static_cast<long long>(h.vertex_count()) * f[0], degrees, nullptr,
                    f, f, best_value);
    SubgraphOpt result{best_value,
                       Graph(h.vertex_count(), subset_edges(h.edges(), best_counter))};
    if (objective_value(f, result.witness) != result.value)
        throw std::logic_error("brute_force_subgraph: witness value mismatch");
    return result;
}

BipartiteSubgraphOpt brute_force_bipartite(const BipartiteGraph& h, const ObjectiveVector& f,
                                           const ObjectiveVector& g) {
    if (h.edge_count() > kBruteForceEdgeLimit)
        throw std::invalid_argument("brute_force_bipartite: more than 25 edges");
    require_length(f, static_cast<std::size_t>(h.right_count()) + 1, "brute_force_bipartite(f)");
    require_length(g, static_cast<std::size_t>(h.left_count()) + 1, "brute_force_bipartite(g)");
    std::vector<int> left(h.left_count(), 0), right(h.right_count(), 0);
    long long initial =
        static_cast<long long>(h.left_count()) * f[0] + static_cast<long long>(h.right_count()) * g[0];
    long long best_value = 0;
    std::uint64_t best_counter = best_subset(h.edges(), initial, left, &right, f, g, best_value);
    BipartiteSubgraphOpt result{
        best_value,
        BipartiteGraph(h.left_count(), h.right_count(), subset_edges(h.edges(), best_counter))};
    if (bi_objective_value(f, g, result.witness) != result.value)
        throw std::logic_error("brute_force_bipartite: witness value mismatch");
    return result;
}

}  // namespace degenum
