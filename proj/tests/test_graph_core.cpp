#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <sstream>

#include "degenum/edgelist.hpp"
#include "degenum/graph.hpp"
#include "test_util.hpp"

using namespace degenum;
using degenum::testing::Rng;

namespace {

// the running 7-vertex example: degree sequence 3232323
Graph paper_graph() {
    return Graph(7, {{0, 1}, {0, 5}, {0, 6}, {1, 2}, {2, 3}, {2, 6}, {3, 4}, {4, 5}, {4, 6}});
}

// the running (2,6) example with left degrees 2 and 5
BipartiteGraph paper_bigraph() {
    return BipartiteGraph(2, 6, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}});
}

}  // namespace

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(2, 3, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph(2, 3, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK(Graph(3, {{2, 1}}).edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("degree sequence") {
    CHECK(degree_sequence(paper_graph()) == DegreeSequence{3, 2, 3, 2, 3, 2, 3});
    CHECK(degree_sequence(Graph(5, {})) == DegreeSequence{0, 0, 0, 0, 0});
    CHECK(degree_sequence(complete_graph(3)) == DegreeSequence{2, 2, 2});
}

TEST_CASE("degree enumerator") {
    CHECK(degree_enumerator(paper_graph()) == Enumerator{0, 0, 3, 4, 0, 0, 0});
    CHECK(degree_enumerator(Graph(4, {})) == Enumerator{4, 0, 0, 0});
}

TEST_CASE("bi-enumerator") {
    BiEnumerator b = bi_enumerator(paper_bigraph());
    CHECK(b.a == std::vector<int>{0, 0, 1, 0, 0, 1, 0});
    CHECK(b.c == std::vector<int>{0, 5, 1});

    BiEnumerator empty = bi_enumerator(BipartiteGraph(3, 4, {}));
    CHECK(empty.a == std::vector<int>{3, 0, 0, 0, 0});
    CHECK(empty.c == std::vector<int>{4, 0, 0, 0});

    BiEnumerator full = bi_enumerator(complete_bipartite(2, 6));
    CHECK(full.a == std::vector<int>{0, 0, 0, 0, 0, 0, 2});
    CHECK(full.c == std::vector<int>{0, 0, 6});
}

TEST_CASE("objective values") {
    Graph g = paper_graph();
    CHECK(objective_value(ObjectiveVector(7, 1), g) == 7);
    ObjectiveVector identity(7);
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(objective_value(identity, g) == 18);  // 2|E|
    ObjectiveVector f3(7, 0);
    f3[3] = 1;
    CHECK(objective_value(f3, g) == 4);
    CHECK_THROWS_AS(objective_value(ObjectiveVector(6, 1), g), std::invalid_argument);
}

TEST_CASE("bi-objective values") {
    BipartiteGraph g = paper_bigraph();
    CHECK(bi_objective_value(ObjectiveVector(7, 1), ObjectiveVector(3, 1), g) == 8);
    CHECK(bi_objective_value(ObjectiveVector(7, 0), {0, 1, 0}, g) == 5);
    ObjectiveVector f(7, 0);
    f[2] = 1;
    f[5] = 1;
    CHECK(bi_objective_value(f, ObjectiveVector(3, 0), g) == 2);
    CHECK_THROWS_AS(bi_objective_value(ObjectiveVector(6, 0), ObjectiveVector(3, 0), g),
                    std::invalid_argument);
    CHECK_THROWS_AS(bi_objective_value(ObjectiveVector(7, 0), ObjectiveVector(2, 0), g),
                    std::invalid_argument);
}

TEST_CASE("objective overflow contract") {
    Graph g(2, {{0, 1}});
    CHECK_THROWS_AS(objective_value({1LL << 32, 0}, g), std::invalid_argument);
    CHECK_NOTHROW(objective_value({1LL << 31, 0}, g));
}

TEST_CASE("enumerator sums and objective agreement on random graphs") {
    Rng rng(0);
    for (int iter = 0; iter < 10000; ++iter) {
        int n = testing::uniform(rng, 1, 8);
        Graph g = testing::random_graph(rng, n, n * (n - 1) / 2);
        Enumerator e = degree_enumerator(g);
        CHECK(std::accumulate(e.begin(), e.end(), 0) == n);
        long long weighted = 0;
        for (int i = 0; i < n; ++i) weighted += static_cast<long long>(i) * e[i];
        CHECK(weighted == 2LL * g.edge_count());

        ObjectiveVector f = testing::random_objective(rng, n);
        long long direct = 0;
        for (int deg : degree_sequence(g)) direct += f[deg];
        CHECK(objective_value(f, g) == direct);
    }
}

TEST_CASE("bipartite edge-count identity") {
    Rng rng(1);
    for (int iter = 0; iter < 2000; ++iter) {
        int m = testing::uniform(rng, 1, 4), n = testing::uniform(rng, 1, 6);
        std::vector<std::pair<int, int>> all;
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < n; ++v) all.emplace_back(u, v);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(testing::uniform(rng, 0, static_cast<int>(all.size())));
        BipartiteGraph g(m, n, all);
        BiEnumerator b = bi_enumerator(g);
        long long left = 0, right = 0;
        for (std::size_t k = 0; k < b.a.size(); ++k) left += k * b.a[k];
        for (std::size_t k = 0; k < b.c.size(); ++k) right += k * b.c[k];
        CHECK(left == g.edge_count());
        CHECK(right == g.edge_count());
    }
}

TEST_CASE("enumerator is relabeling-invariant") {
    Rng rng(2);
    for (int iter = 0; iter < 500; ++iter) {
        int n = testing::uniform(rng, 2, 9);
        Graph g = testing::random_graph(rng, n, 2 * n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabeled;
        for (auto [u, v] : g.edges()) relabeled.emplace_back(perm[u], perm[v]);
        CHECK(degree_enumerator(Graph(n, relabeled)) == degree_enumerator(g));
    }
}

TEST_CASE("edge list round trip") {
    Graph g = paper_graph();
    AnyGraph parsed = parse_edge_list(format_edge_list(g));
    CHECK(std::get<Graph>(parsed) == g);

    BipartiteGraph bg = paper_bigraph();
    AnyGraph bparsed = parse_edge_list(format_edge_list(bg));
    CHECK(std::get<BipartiteGraph>(bparsed) == bg);
}

TEST_CASE("edge list parsing") {
    auto parsed = parse_edge_list("# example\n\ngraph 3\n0 1\n# middle comment\n1 2\n");
    CHECK(std::get<Graph>(parsed) == Graph(3, {{0, 1}, {1, 2}}));
    CHECK_THROWS_AS(parse_edge_list("triangle 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("graph\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("graph 3\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("graph 3\n0 1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
}
