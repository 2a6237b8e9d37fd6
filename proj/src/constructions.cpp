#include "degenum/constructions.hpp"

#include <stdexcept>
#include <string>

namespace degenum {

namespace {

std::vector<std::pair<int, int>> circulant_edges(int n, int r) {
    // even r: distances 1..r/2 around the circle
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= r / 2; ++j) edges.emplace_back(i, (i + j) % n);
    return edges;
}

std::vector<std::pair<int, int>> matching_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n / 2; ++i) edges.emplace_back(i, n / 2 + i);
    return edges;
}

std::vector<std::pair<int, int>> regular_edges(int n, int r) {
    auto edges = circulant_edges(n, r % 2 == 0 ? r : r - 1);
    if (r % 2 == 1) {
        auto match = matching_edges(n);
        edges.insert(edges.end(), match.begin(), match.end());
    }
    return edges;
}

}  // namespace

void validate(const RegularSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("RegularSpec: n must be positive");
    if (spec.r < 0 || spec.r > spec.n - 1)
        throw std::invalid_argument("RegularSpec: r out of range [0," + std::to_string(spec.n - 1) +
                                    "]");
    if (spec.n % 2 == 1 && spec.r % 2 == 1)
        throw std::invalid_argument("RegularSpec: no r-regular n-graph with n and r both odd");
}

void validate(const NearRegularSpec& spec) {
    if (spec.n < 1 || spec.n % 2 == 0)
        throw std::invalid_argument("NearRegularSpec: n must be odd");
    if (spec.r % 2 == 0 || spec.r <= 0 || spec.r >= spec.n - 1)
        throw std::invalid_argument("NearRegularSpec: r must be odd with 0 < r < n-1");
    if (spec.s % 2 == 1 || spec.s < 0 || spec.s > spec.n - 1)
        throw std::invalid_argument("NearRegularSpec: s must be even with 0 <= s <= n-1");
}

void validate(const BipartiteSpec& spec) {
    if (spec.n < 0) throw std::invalid_argument("BipartiteSpec: n must be nonnegative");
    if (!(0 <= spec.i && spec.i <= spec.j && spec.j <= spec.n))
        throw std::invalid_argument("BipartiteSpec: need 0 <= i <= j <= n");
    int kmin = std::max(0, spec.i + spec.j - spec.n);
    if (spec.k < kmin || spec.k > spec.i)
        throw std::invalid_argument("BipartiteSpec: k out of range [max{0,(i+j)-n}, i]");
}

Graph build_regular(const RegularSpec& spec) {
    validate(spec);
    return Graph(spec.n, regular_edges(spec.n, spec.r));
}

Graph build_near_regular(const NearRegularSpec& spec) {
    validate(spec);
    const int n = spec.n;
    if (spec.s == 0) return Graph(n, regular_edges(n - 1, spec.r));

    auto edges = regular_edges(n - 1, spec.r);
    const int half = (n - 1) / 2;
    for (int i = 0; i < spec.s / 2; ++i) {
        std::pair<int, int> removed{i, half + i};
        std::erase(edges, removed);
        edges.emplace_back(i, n - 1);
        edges.emplace_back(half + i, n - 1);
    }
    return Graph(n, std::move(edges));
}

BipartiteGraph build_bipartite_2n(const BipartiteSpec& spec) {
    validate(spec);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < spec.i; ++v) edges.emplace_back(0, v);
    for (int v = spec.i - spec.k; v < spec.i - spec.k + spec.j; ++v) edges.emplace_back(1, v);
    return BipartiteGraph(2, spec.n, std::move(edges));
}

Graph build_prop23_graph(int k, const std::vector<int>& s) {
    if (k < 1) throw std::invalid_argument("build_prop23_graph: k must be positive");
    if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument("build_prop23_graph: need exactly k values");
    for (int i = 0; i < k; ++i) {
        if (s[i] < 1 || s[i] > 2 * k)
            throw std::invalid_argument("build_prop23_graph: entries must lie in [1, 2k]");
        if (i > 0 && s[i] <= s[i - 1])
            throw std::invalid_argument("build_prop23_graph: entries must be strictly increasing");
    }

    // gap sizes e_i = s_{i+1} - s_i - 1 with sentinels s_0 = 0, s_{k+1} = 2k+1
    std::vector<int> gaps(k + 1);
    for (int i = 0; i <= k; ++i) {
        int lo = i == 0 ? 0 : s[i - 1];
        int hi = i == k ? 2 * k + 1 : s[i];
        gaps[i] = hi - lo - 1;
    }

    std::vector<int> left, right;
    for (int v = 0; v <= 2 * k; ++v) (v % 2 == 1 ? left : right).push_back(v);

    std::vector<std::pair<int, int>> edges;
    std::size_t next_left = 0;
    for (int block = 0; block <= k; ++block)
        for (int t = 0; t < gaps[block]; ++t) {
            int u = left[next_left++];
            for (int idx = 0; idx < block; ++idx) edges.emplace_back(u, right[idx]);
        }
    for (std::size_t p = 0; p < right.size(); ++p)
        for (std::size_t q = p + 1; q < right.size(); ++q) edges.emplace_back(right[p], right[q]);
    return Graph(2 * k + 1, std::move(edges));
}

}  // namespace degenum
