#include "degenum/reductions.hpp"

#include <stdexcept>

#include "degenum/optimize.hpp"

namespace degenum {

void validate(const X3CInstance& inst) {
    if (inst.n < 0) throw std::invalid_argument("X3CInstance: negative ground-set size");
    for (const auto& s : inst.subsets) {
        if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
            throw std::invalid_argument("X3CInstance: subset elements must be distinct");
        for (int v : s)
            if (v < 0 || v >= inst.n)
                throw std::invalid_argument("X3CInstance: element out of range");
    }
}

ObjectiveVector cubic_objective(int n) {
    if (n < 4) throw std::invalid_argument("cubic_objective: n must be at least 4");
    ObjectiveVector f(n, 0);
    f[0] = n - 1;
    f[3] = n;
    return f;
}

bool decide_cubic_subgraph(const Graph& h) {
    const int n = h.vertex_count();
    if (n < 4) return false;  // degree 3 needs at least 4 vertices
    long long threshold = static_cast<long long>(n) * n - n + 1;
    return brute_force_subgraph(h, cubic_objective(n)).value >= threshold;
}

std::tuple<BipartiteGraph, ObjectiveVector, ObjectiveVector> x3c_to_bipartite(
    const X3CInstance& inst) {
    validate(inst);
    if (inst.n % 3 != 0)
        throw std::invalid_argument("x3c_to_bipartite: ground-set size not divisible by 3");
    const int m = static_cast<int>(inst.subsets.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int v : inst.subsets[i]) edges.emplace_back(i, v);
    BipartiteGraph h(m, inst.n, std::move(edges));

    ObjectiveVector f(inst.n + 1), g(m + 1);
    for (int x = 0; x <= inst.n; ++x) f[x] = static_cast<long long>(x) * (x - 3);
    for (int x = 0; x <= m; ++x) g[x] = -static_cast<long long>(x - 1) * (x - 1);
    return {std::move(h), std::move(f), std::move(g)};
}

bool decide_x3c(const X3CInstance& inst) {
    if (3 * static_cast<int>(inst.subsets.size()) > 25)
        throw std::invalid_argument("decide_x3c: instance too large for brute force");
    auto [h, f, g] = x3c_to_bipartite(inst);
    return brute_force_bipartite(h, f, g).value == 0;
}

}  // namespace degenum
