#pragma once

#include <optional>

#include "degenum/extremal.hpp"
#include "degenum/graph.hpp"

namespace degenum {

/// Optimum of f over degree enumerators of subgraphs of K_n, with the
/// regular / near-regular witness realizing it.
struct CompleteOpt {
    long long value;
    Graph witness;
    int r;                 // witness degree (the regular degree, or the common degree)
    std::optional<int> s;  // set when the witness is the near-regular graph
};

/// Optimum of <f + g, b> over subgraphs of K_{2,n} with witness G_n(i,j,k).
struct K2nOpt {
    long long value;
    BipartiteGraph witness;
    int i;
    int j;
    int k;
};

/// Brute-force optimum with an arbitrary subgraph witness.
struct SubgraphOpt {
    long long value;
    Graph witness;
};

struct BipartiteSubgraphOpt {
    long long value;
    BipartiteGraph witness;
};

/// O(n^2): pick r maximizing f, even s maximizing f over even indices, and
/// return G_n(r), G_n(s) or G_n(r,s) by the parity cases. Ties break to the
/// smallest index.
CompleteOpt optimize_complete(int n, const ObjectiveVector& f);

/// Slower variant: scan every vertex of the enumerator polytope and keep
/// the first maximizer in canonical order. Cross-checks the fast path.
CompleteOpt optimize_complete_scan(int n, const ObjectiveVector& f);

/// Scan the O(n^2) closed-form vertices of the bi-enumerator polytope of
/// K_{2,n}; first maximizer in canonical order wins. |f| = n+1, |g| = 3.
K2nOpt optimize_k2n(int n, const ObjectiveVector& f, const ObjectiveVector& g);

/// Exhaustive optimum over all 2^C(n,2) subgraphs of K_n; n <= 8.
SubgraphOpt brute_force_complete(int n, const ObjectiveVector& f);

/// Exhaustive optimum over edge subsets of H; |E(H)| <= 25. Ties keep the
/// subset met first in the scan.
SubgraphOpt brute_force_subgraph(const Graph& h, const ObjectiveVector& f);

/// Bipartite analogue; |f| = n+1, |g| = m+1, |E(H)| <= 25.
BipartiteSubgraphOpt brute_force_bipartite(const BipartiteGraph& h, const ObjectiveVector& f,
                                           const ObjectiveVector& g);

}  // namespace degenum
