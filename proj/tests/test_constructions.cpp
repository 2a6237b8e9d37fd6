#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "degenum/constructions.hpp"
#include "degenum/graph.hpp"

using namespace degenum;

namespace {

std::multiset<int> degree_multiset(const Graph& g) {
    auto d = degree_sequence(g);
    return {d.begin(), d.end()};
}

std::vector<int> combination_first(int k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i + 1;
    return s;
}

bool combination_next(std::vector<int>& s, int limit) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[i] < limit - (k - 1 - i)) {
            ++s[i];
            for (int t = i + 1; t < k; ++t) s[t] = s[t - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("regular graph goldens") {
    CHECK(build_regular({7, 4}) ==
          Graph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5},
                    {4, 6}, {5, 6}, {5, 0}, {6, 0}, {6, 1}}));
    CHECK(build_regular({8, 3}) ==
          Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4},
                    {1, 5}, {2, 6}, {3, 7}}));
    CHECK(build_regular({5, 0}) == Graph(5, {}));
}

TEST_CASE("regular graph validation") {
    CHECK_THROWS_AS(build_regular({7, 3}), std::invalid_argument);  // odd n, odd r
    CHECK_THROWS_AS(build_regular({7, 7}), std::invalid_argument);
    CHECK_THROWS_AS(build_regular({7, -1}), std::invalid_argument);
}

TEST_CASE("regularity is exact for all valid specs up to n = 64") {
    for (int n = 1; n <= 64; ++n)
        for (int r = 0; r < n; ++r) {
            if (n % 2 == 1 && r % 2 == 1) continue;
            Graph g = build_regular({n, r});
            for (int deg : degree_sequence(g)) CHECK(deg == r);
        }
}

TEST_CASE("near-regular golden and degenerate cases") {
    CHECK(build_near_regular({7, 3, 4}) ==
          Graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 5}, {0, 6}, {3, 6},
                    {1, 6}, {4, 6}}));

    Graph s0 = build_near_regular({7, 3, 0});
    CHECK(s0.vertex_count() == 7);
    CHECK(degree_sequence(s0) == DegreeSequence{3, 3, 3, 3, 3, 3, 0});
    Graph e63 = build_regular({6, 3});
    CHECK(s0.edges() == e63.edges());

    CHECK(degree_multiset(build_near_regular({9, 5, 6})) ==
          std::multiset<int>{5, 5, 5, 5, 5, 5, 5, 5, 6});
}

TEST_CASE("near-regular validation") {
    CHECK_THROWS_AS(build_near_regular({8, 3, 2}), std::invalid_argument);  // even n
    CHECK_THROWS_AS(build_near_regular({7, 2, 2}), std::invalid_argument);  // even r
    CHECK_THROWS_AS(build_near_regular({7, 7, 2}), std::invalid_argument);  // r >= n-1
    CHECK_THROWS_AS(build_near_regular({7, 3, 3}), std::invalid_argument);  // odd s
    CHECK_THROWS_AS(build_near_regular({7, 3, 8}), std::invalid_argument);
}

TEST_CASE("near-regular degree multiset for all valid specs up to n = 33") {
    for (int n = 3; n <= 33; n += 2)
        for (int r = 1; r < n - 1; r += 2)
            for (int s = 0; s < n; s += 2) {
                Graph g = build_near_regular({n, r, s});
                std::multiset<int> expected;
                for (int i = 0; i < n - 1; ++i) expected.insert(r);
                expected.insert(s);
                CHECK(degree_multiset(g) == expected);
            }
}

TEST_CASE("near-regular removed and added edge sets are disjoint") {
    for (int n = 5; n <= 15; n += 2)
        for (int r = 1; r < n - 1; r += 2)
            for (int s = 2; s < n; s += 2) {
                std::set<std::pair<int, int>> removed, added;
                int half = (n - 1) / 2;
                for (int i = 0; i < s / 2; ++i) {
                    removed.insert({i, half + i});
                    added.insert({i, n - 1});
                    added.insert({half + i, n - 1});
                }
                for (const auto& e : removed) CHECK(!added.contains(e));
                // the witness contains all added edges and no removed ones
                std::set<std::pair<int, int>> edges(build_near_regular({n, r, s}).edges().begin(),
                                                    build_near_regular({n, r, s}).edges().end());
                for (const auto& e : added) CHECK(edges.contains(e));
                for (const auto& e : removed) CHECK(!edges.contains(e));
            }
}

TEST_CASE("bipartite construction goldens") {
    BipartiteGraph empty = build_bipartite_2n({6, 0, 0, 0});
    CHECK(empty.edge_count() == 0);
    CHECK(bi_enumerator(empty) == BiEnumerator{{2, 0, 0, 0, 0, 0, 0}, {6, 0, 0}});

    CHECK(bi_enumerator(build_bipartite_2n({5, 1, 2, 1})) ==
          BiEnumerator{{0, 1, 1, 0, 0, 0}, {3, 1, 1}});
    CHECK(bi_enumerator(build_bipartite_2n({6, 2, 5, 1})) ==
          BiEnumerator{{0, 0, 1, 0, 0, 1, 0}, {0, 5, 1}});
}

TEST_CASE("bipartite construction validation") {
    CHECK_THROWS_AS(build_bipartite_2n({6, 3, 2, 1}), std::invalid_argument);  // i > j
    CHECK_THROWS_AS(build_bipartite_2n({6, 2, 5, 0}), std::invalid_argument);  // k < (i+j)-n
    CHECK_THROWS_AS(build_bipartite_2n({6, 2, 5, 3}), std::invalid_argument);  // k > i
    CHECK_THROWS_AS(build_bipartite_2n({6, 2, 7, 2}), std::invalid_argument);  // j > n
}

TEST_CASE("bipartite bi-enumerator matches the closed form exhaustively to n = 20") {
    for (int n = 1; n <= 20; ++n)
        for (int i = 0; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                for (int k = std::max(0, i + j - n); k <= i; ++k) {
                    BipartiteGraph g = build_bipartite_2n({n, i, j, k});
                    BiEnumerator b = bi_enumerator(g);
                    std::vector<int> a_expect(n + 1, 0);
                    a_expect[i] += 1;
                    a_expect[j] += 1;
                    CHECK(b.a == a_expect);
                    CHECK(b.c == std::vector<int>{n - (i + j) + k, (i + j) - 2 * k, k});
                }
}

TEST_CASE("gap-encoding construction small cases") {
    // k=1, s=(1): gaps e_0 = 0, e_1 = 1
    Enumerator e1 = degree_enumerator(build_prop23_graph(1, {1}));
    CHECK(e1[0] == 0);
    // k=2, s=(1,2): prefix (0,0)
    Enumerator e2 = degree_enumerator(build_prop23_graph(2, {1, 2}));
    CHECK(e2[0] == 0);
    CHECK(e2[1] == 0);
}

TEST_CASE("gap-encoding construction validation") {
    CHECK_THROWS_AS(build_prop23_graph(2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(build_prop23_graph(2, {2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_prop23_graph(2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(build_prop23_graph(2, {1, 5}), std::invalid_argument);
}

TEST_CASE("distinct choices give distinct enumerators for k <= 5") {
    for (int k = 1; k <= 5; ++k) {
        std::set<Enumerator> seen;
        std::map<std::vector<int>, std::vector<int>> prefix_of;
        std::vector<int> s = combination_first(k);
        int count = 0;
        do {
            Graph g = build_prop23_graph(k, s);
            CHECK(g.vertex_count() == 2 * k + 1);
            Enumerator e = degree_enumerator(g);
            // prefix recovers the gap sizes
            std::vector<int> gaps(k);
            for (int i = 0; i < k; ++i) {
                int lo = i == 0 ? 0 : s[i - 1];
                gaps[i] = s[i] - lo - 1;
            }
            CHECK(std::vector<int>(e.begin(), e.begin() + k) == gaps);
            seen.insert(e);
            ++count;
        } while (combination_next(s, 2 * k));
        CHECK(static_cast<int>(seen.size()) == count);
    }
}
