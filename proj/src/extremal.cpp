#include "degenum/extremal.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "degenum/constructions.hpp"

namespace degenum {

namespace {

Enumerator regular_point(int n, int r) {
    Enumerator e(n, 0);
    e[r] = n;
    return e;
}

Enumerator near_regular_point(int n, int r, int s) {
    Enumerator e(n, 0);
    e[r] = n - 1;
    e[s] += 1;
    return e;
}

bool is_vertex_params_complete(int n, int r, std::optional<int> s) {
    if (r < 0 || r > n - 1) return false;
    if (!s) return n % 2 == 0 || r % 2 == 0;
    return n % 2 == 1 && r % 2 == 1 && 0 < r && r < n - 1 && *s % 2 == 0 && 0 <= *s &&
           *s <= n - 1;
}

int kmin_2n(int n, int i, int j) { return std::max(0, i + j - n); }

bool is_b2_vertex_params(int n, int i, int j, int k) {
    if (!(0 <= i && i <= j && j <= n)) return false;
    if (k < kmin_2n(n, i, j) || k > i) return false;
    if (i == j) return k == kmin_2n(n, i, i) || k == i;
    return i <= (n - 1) / 2 && j >= (n + 2) / 2 && k == kmin_2n(n, i, j);
}

Rational dot(const Rational& coeff, int value) { return coeff * value; }

}  // namespace

BiEnumerator bi_enumerator_point(int n, int i, int j, int k) {
    BiEnumerator b{std::vector<int>(n + 1, 0), std::vector<int>(3, 0)};
    b.a[i] += 1;
    b.a[j] += 1;
    b.c = {n - (i + j) + k, (i + j) - 2 * k, k};
    return b;
}

std::vector<EnumeratorVertex> vertices_complete(int n) {
    if (n < 1) throw std::invalid_argument("vertices_complete: n must be positive");
    std::vector<EnumeratorVertex> out;
    if (n % 2 == 0) {
        for (int r = 0; r < n; ++r)
            out.push_back({regular_point(n, r), r, std::nullopt, build_regular({n, r})});
        return out;
    }
    for (int r = 0; r < n; r += 2)
        out.push_back({regular_point(n, r), r, std::nullopt, build_regular({n, r})});
    for (int r = 1; r < n - 1; r += 2)
        for (int s = 0; s < n; s += 2)
            out.push_back({near_regular_point(n, r, s), r, s, build_near_regular({n, r, s})});
    return out;
}

std::vector<Enumerator> vertices_complete_points(int n) {
    if (n < 1) throw std::invalid_argument("vertices_complete_points: n must be positive");
    std::vector<Enumerator> out;
    if (n % 2 == 0) {
        for (int r = 0; r < n; ++r) out.push_back(regular_point(n, r));
        return out;
    }
    for (int r = 0; r < n; r += 2) out.push_back(regular_point(n, r));
    for (int r = 1; r < n - 1; r += 2)
        for (int s = 0; s < n; s += 2) out.push_back(near_regular_point(n, r, s));
    return out;
}

long long vertex_count_complete(int n) {
    if (n < 1) throw std::invalid_argument("vertex_count_complete: n must be positive");
    if (n % 2 == 0) return n;
    long long half = (n + 1) / 2;
    return half * half;
}

CompleteCertificate certificate_complete(int n, int r, std::optional<int> s) {
    if (n < 1 || !is_vertex_params_complete(n, r, s))
        throw std::invalid_argument("certificate_complete: params do not name a vertex");
    ObjectiveVector f(n, 0);
    if (!s) {
        f[r] = 1;
        return {std::move(f), regular_point(n, r), r, std::nullopt};
    }
    f[r] = 2;
    f[*s] += 1;
    return {std::move(f), near_regular_point(n, r, *s), r, s};
}

std::vector<B1Vertex> vertices_b1(int n) {
    if (n < 1) throw std::invalid_argument("vertices_b1: n must be positive");
    std::vector<B1Vertex> out;
    for (int k = 0; k <= n; ++k) {
        BiEnumerator point{std::vector<int>(n + 1, 0), {n - k, k}};
        point.a[k] = 1;
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < k; ++v) edges.emplace_back(0, v);
        out.push_back({std::move(point), k, BipartiteGraph(1, n, std::move(edges))});
    }
    // distinct left unit vectors make the points affinely independent
    for (int k = 0; k <= n; ++k)
        for (int t = 0; t <= n; ++t)
            if (out[k].point.a[t] != (t == k ? 1 : 0))
                throw std::logic_error("vertices_b1: left blocks are not unit vectors");
    return out;
}

std::vector<BiEnumeratorVertex> all_bi_enumerators_2n(int n) {
    if (n < 1) throw std::invalid_argument("all_bi_enumerators_2n: n must be positive");
    std::vector<BiEnumeratorVertex> out;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            for (int k = kmin_2n(n, i, j); k <= i; ++k)
                out.push_back({bi_enumerator_point(n, i, j, k), i, j, k,
                               build_bipartite_2n({n, i, j, k})});
    return out;
}

long long bi_enumerator_count_2n(int n) {
    if (n < 1) throw std::invalid_argument("bi_enumerator_count_2n: n must be positive");
    long long nn = n;
    if (n % 2 == 0) return (nn + 2) * (nn + 4) * (2 * nn + 3) / 24;
    return (nn + 1) * (nn + 3) * (2 * nn + 7) / 24;
}

std::vector<BiEnumeratorVertex> vertices_b2(int n) {
    if (n < 1) throw std::invalid_argument("vertices_b2: n must be positive");
    std::vector<BiEnumeratorVertex> out;
    for (int i = 0; i <= n; ++i) {
        int lo = kmin_2n(n, i, i);
        out.push_back({bi_enumerator_point(n, i, i, lo), i, i, lo,
                       build_bipartite_2n({n, i, i, lo})});
        if (lo == i) continue;  // i = 0 or n: the two k-extremes coincide
        out.push_back(
            {bi_enumerator_point(n, i, i, i), i, i, i, build_bipartite_2n({n, i, i, i})});
    }
    for (int i = 0; i <= (n - 1) / 2; ++i)
        for (int j = (n + 2) / 2; j <= n; ++j) {
            int k = kmin_2n(n, i, j);
            out.push_back({bi_enumerator_point(n, i, j, k), i, j, k,
                           build_bipartite_2n({n, i, j, k})});
        }
    return out;
}

B2Certificate certificate_b2(int n, int i, int j, int k) {
    if (n < 1 || !is_b2_vertex_params(n, i, j, k))
        throw std::invalid_argument("certificate_b2: params do not name a vertex");
    const long long big = 3LL * n * n + 1;
    ObjectiveVector f(n + 1, 0), g(3, 0);
    if (i == j) {
        f[i] = big;
        if (k == i)
            g = {0, 0, 1};  // maximize full-intersection count
        else
            g = {0, 1, 0};  // maximize degree-1 right vertices
    } else {
        f[i] = big;
        f[j] = big;
        if (i + j <= n)
            g = {0, 2LL * j - n, static_cast<long long>(i + j) - n};
        else
            g = {0, 2LL * ((i + j) - n), 2LL * ((i + j) - n) - 1};
    }
    return {std::move(f), std::move(g), bi_enumerator_point(n, i, j, k), i, j, k};
}

std::vector<std::pair<Rational, BiEnumerator>> convex_witness_b2(int n, int i, int j, int k) {
    if (n < 1) throw std::invalid_argument("convex_witness_b2: n must be positive");
    if (!(0 <= i && i <= j && j <= n) || k < kmin_2n(n, i, j) || k > i)
        throw std::invalid_argument("convex_witness_b2: (i,j,k) is not a bi-enumerator index");
    if (is_b2_vertex_params(n, i, j, k))
        throw std::invalid_argument("convex_witness_b2: point is a vertex");

    const int kmin = kmin_2n(n, i, j);
    auto b = [n](int ii, int jj, int kk) { return bi_enumerator_point(n, ii, jj, kk); };
    std::vector<std::pair<Rational, BiEnumerator>> comb;

    if (kmin < k && k < i) {
        comb = {{Rational(1, 2), b(i, j, k - 1)}, {Rational(1, 2), b(i, j, k + 1)}};
    } else if (2 * j <= n) {
        // both left degrees in the low range
        if (k == kmin)
            comb = {{Rational(1, 2), b(i, i, 0)}, {Rational(1, 2), b(j, j, 0)}};
        else
            comb = {{Rational(1, 2), b(i, i, i)},
                    {Rational(j - i, 2 * j), b(j, j, 0)},
                    {Rational(i, 2 * j), b(j, j, j)}};
    } else if (2 * i >= n) {
        // both left degrees in the high range
        if (k == kmin)
            comb = {{Rational(1, 2), b(i, i, 2 * i - n)}, {Rational(1, 2), b(j, j, 2 * j - n)}};
        else
            comb = {{Rational(n - j, 2 * (n - i)), b(i, i, i)},
                    {Rational(j - i, 2 * (n - i)), b(i, i, 2 * i - n)},
                    {Rational(1, 2), b(j, j, j)}};
    } else {
        // i low, j high: only k = i reaches here (k = kmin is a vertex)
        if (j <= 2 * i)
            comb = {{Rational(j - i, 2 * i), b(i, i, 0)},
                    {Rational(2 * i - j, 2 * i), b(i, i, i)},
                    {Rational(1, 2), b(j, j, j)}};
        else if (i + j <= n)
            comb = {{Rational(i, j), b(i, i, 0)},
                    {Rational(i, j), b(j, j, j)},
                    {Rational(j - 2 * i, j), b(i, j, 0)}};
        else
            comb = {{Rational(n - j, n - i), b(i, i, i)},
                    {Rational(n - j, n - i), b(j, j, 2 * j - n)},
                    {Rational((i + j - n) + (j - 2 * i), n - i), b(i, j, i + j - n)}};
    }

    // the combination must reproduce the point exactly
    BiEnumerator target = bi_enumerator_point(n, i, j, k);
    Rational total = 0;
    std::vector<Rational> acc_a(n + 1, 0), acc_c(3, 0);
    for (const auto& [coeff, point] : comb) {
        if (coeff < 0) throw std::logic_error("convex_witness_b2: negative coefficient");
        total += coeff;
        for (int t = 0; t <= n; ++t) acc_a[t] += dot(coeff, point.a[t]);
        for (int t = 0; t < 3; ++t) acc_c[t] += dot(coeff, point.c[t]);
    }
    bool ok = total == 1;
    for (int t = 0; t <= n && ok; ++t) ok = acc_a[t] == target.a[t];
    for (int t = 0; t < 3 && ok; ++t) ok = acc_c[t] == target.c[t];
    if (!ok)
        throw std::logic_error("convex_witness_b2: combination does not reproduce b_" +
                               std::to_string(n) + "(" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(k) + ")");
    return comb;
}

}  // namespace degenum
