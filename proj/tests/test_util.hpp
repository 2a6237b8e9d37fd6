#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "degenum/graph.hpp"

namespace degenum::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random graph with a uniformly chosen edge count in [0, max_edges].
inline Graph random_graph(Rng& rng, int n, int max_edges) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    int want = uniform(rng, 0, std::min<int>(max_edges, static_cast<int>(all.size())));
    all.resize(want);
    return Graph(n, std::move(all));
}

inline ObjectiveVector random_objective(Rng& rng, int len, int lo = -10, int hi = 10) {
    ObjectiveVector f(len);
    for (auto& v : f) v = uniform(rng, lo, hi);
    return f;
}

inline std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& points) {
    return {points.begin(), points.end()};
}

}  // namespace degenum::testing
