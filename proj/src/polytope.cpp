#include "degenum/polytope.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "degenum/extremal.hpp"
#include "degenum/simplex.hpp"
#include "degenum/subset_scan.hpp"

namespace degenum {

namespace {

constexpr int kEnumerateEdgeLimit = 28;  // K_8 has 28 edges
constexpr int kExtremalMaxPoints = 2000;
constexpr int kExtremalMaxDim = 16;

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = v.size();
        for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
        return h;
    }
};

// Gray-code scan over edge subsets collecting the distinct count vectors.
// `on_toggle(bit, bump)` translates an edge flip into count updates via
// bump(slot, delta). Entries are bounded by max_entry, so when the whole
// vector packs into 64 bits the hash-set key is a single integer kept
// current in O(1) per flip.
template <typename OnToggle>
std::vector<std::vector<int>> collect_distinct(int edge_count, std::vector<int> counts,
                                               int max_entry, OnToggle&& on_toggle) {
    const int entries = static_cast<int>(counts.size());
    const int bits = std::bit_width(static_cast<unsigned>(std::max(1, max_entry)));
    std::vector<std::vector<int>> out;
    if (entries > 0 && bits * entries <= 64) {
        std::uint64_t key = 0;
        for (int t = 0; t < entries; ++t)
            key |= static_cast<std::uint64_t>(counts[t]) << (t * bits);
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(std::size_t(1) << std::min(edge_count, 16));
        seen.insert(key);
        gray_scan(edge_count, [&](int bit) {
            on_toggle(bit, [&](int slot, int delta) {
                if (delta > 0)
                    key += std::uint64_t(1) << (slot * bits);
                else
                    key -= std::uint64_t(1) << (slot * bits);
            });
            seen.insert(key);
        });
        const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
        out.reserve(seen.size());
        for (std::uint64_t packed : seen) {
            std::vector<int> point(entries);
            for (int t = 0; t < entries; ++t)
                point[t] = static_cast<int>(packed >> (t * bits) & mask);
            out.push_back(std::move(point));
        }
        return out;
    }
    std::unordered_set<std::vector<int>, VectorHash> seen;
    seen.insert(counts);
    gray_scan(edge_count, [&](int bit) {
        on_toggle(bit, [&](int slot, int delta) { counts[slot] += delta; });
        seen.insert(counts);
    });
    out.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace

bool PointSet::contains(const std::vector<int>& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

PointSet make_point_set(int dim, std::vector<std::vector<int>> points) {
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("PointSet: dimension mismatch");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return {dim, std::move(points)};
}

PointSet enumerate_enumerators(const Graph& h) {
    if (h.edge_count() > kEnumerateEdgeLimit)
        throw std::invalid_argument("enumerate_enumerators: more than 28 edges");
    const int n = h.vertex_count();
    std::vector<int> degrees(n, 0);
    std::vector<int> counts(n, 0);
    if (n > 0) counts[0] = n;
    std::uint64_t mask = 0;
    auto points = collect_distinct(h.edge_count(), counts, n, [&](int bit, auto&& bump) {
        const int step = (mask >> bit & 1) ? -1 : 1;
        mask ^= std::uint64_t(1) << bit;
        auto [u, v] = h.edges()[bit];
        for (int w : {u, v}) {
            bump(degrees[w], -1);
            degrees[w] += step;
            bump(degrees[w], +1);
        }
    });
    return make_point_set(n, std::move(points));
}

PointSet enumerate_bi_enumerators(const BipartiteGraph& h) {
    if (h.edge_count() > kEnumerateEdgeLimit)
        throw std::invalid_argument("enumerate_bi_enumerators: more than 28 edges");
    const int m = h.left_count(), n = h.right_count();
    const int a_len = n + 1;
    std::vector<int> left(m, 0), right(n, 0);
    std::vector<int> counts(a_len + m + 1, 0);
    counts[0] = m;
    counts[a_len] = n;
    std::uint64_t mask = 0;
    auto points =
        collect_distinct(h.edge_count(), counts, std::max(m, n), [&](int bit, auto&& bump) {
            const int step = (mask >> bit & 1) ? -1 : 1;
            mask ^= std::uint64_t(1) << bit;
            auto [u, v] = h.edges()[bit];
            bump(left[u], -1);
            left[u] += step;
            bump(left[u], +1);
            bump(a_len + right[v], -1);
            right[v] += step;
            bump(a_len + right[v], +1);
        });
    return make_point_set(a_len + m + 1, std::move(points));
}

VertexCheck check_vertex(const std::vector<int>& p, const PointSet& s) {
    if (static_cast<int>(p.size()) != s.dim)
        throw std::invalid_argument("check_vertex: dimension mismatch");
    if (!s.contains(p)) throw std::invalid_argument("check_vertex: point not in set");

    // feasibility of: sum over q != p of lambda_q (q - p) = 0, sum lambda = 1
    std::vector<std::size_t> others;
    others.reserve(s.points.size() - 1);
    for (std::size_t idx = 0; idx < s.points.size(); ++idx)
        if (s.points[idx] != p) others.push_back(idx);

    const std::size_t rows = static_cast<std::size_t>(s.dim) + 1;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(others.size(), 0));
    std::vector<Rational> b(rows, 0);
    for (std::size_t col = 0; col < others.size(); ++col) {
        const auto& q = s.points[others[col]];
        for (int t = 0; t < s.dim; ++t) a[t][col] = q[t] - p[t];
        a[s.dim][col] = 1;
    }
    b[s.dim] = 1;

    auto lp = solve_equality_feasibility(std::move(a), std::move(b));
    VertexCheck result;
    result.vertex = !lp.feasible;
    if (lp.feasible) {
        for (std::size_t col = 0; col < others.size(); ++col)
            if (lp.solution[col] != 0) result.combination.emplace_back(others[col], lp.solution[col]);
    } else {
        result.separator.assign(lp.farkas.begin(), lp.farkas.begin() + s.dim);
    }
    return result;
}

bool is_vertex(const std::vector<int>& p, const PointSet& s) { return check_vertex(p, s).vertex; }

PointSet extremal_set(const PointSet& s, int jobs) {
    if (static_cast<int>(s.points.size()) > kExtremalMaxPoints)
        throw std::invalid_argument("extremal_set: more than 2000 points");
    if (s.dim > kExtremalMaxDim) throw std::invalid_argument("extremal_set: dimension above 16");

    std::vector<char> keep(s.points.size(), 0);
    if (jobs <= 1) {
        for (std::size_t idx = 0; idx < s.points.size(); ++idx)
            keep[idx] = is_vertex(s.points[idx], s);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t idx = next.fetch_add(1); idx < s.points.size();
                 idx = next.fetch_add(1))
                keep[idx] = is_vertex(s.points[idx], s);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    PointSet out;
    out.dim = s.dim;
    for (std::size_t idx = 0; idx < s.points.size(); ++idx)
        if (keep[idx]) out.points.push_back(s.points[idx]);
    return out;
}

std::optional<std::vector<int>> unique_maximizer(const std::vector<long long>& w,
                                                 const PointSet& s) {
    if (static_cast<int>(w.size()) != s.dim)
        throw std::invalid_argument("unique_maximizer: dimension mismatch");
    const std::vector<int>* best = nullptr;
    long long best_value = 0;
    int best_count = 0;
    for (const auto& p : s.points) {
        long long value = 0;
        for (int t = 0; t < s.dim; ++t) value += w[t] * p[t];
        if (!best || value > best_value) {
            best = &p;
            best_value = value;
            best_count = 1;
        } else if (value == best_value) {
            ++best_count;
        }
    }
    if (!best || best_count != 1) return std::nullopt;
    return *best;
}

std::vector<long long> scale_to_integer(const std::vector<Rational>& v) {
    BigInt lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(x)));
    BigInt gcd = 0;
    std::vector<BigInt> scaled;
    scaled.reserve(v.size());
    for (const auto& x : v) {
        BigInt value = BigInt(numerator(x)) * (lcm / BigInt(denominator(x)));
        scaled.push_back(value);
        gcd = boost::multiprecision::gcd(gcd, value);
    }
    std::vector<long long> out;
    out.reserve(v.size());
    for (auto& value : scaled) {
        if (gcd != 0) value /= gcd;
        if (value > std::numeric_limits<long long>::max() ||
            value < std::numeric_limits<long long>::min())
            throw std::overflow_error("scale_to_integer: entry exceeds 64 bits");
        out.push_back(static_cast<long long>(value));
    }
    return out;
}

bool affinely_independent(const PointSet& s) {
    if (s.points.empty()) return true;
    // rank of {p - p_0} must be |S| - 1
    const std::size_t rows = s.points.size() - 1;
    std::vector<std::vector<Rational>> diff(rows, std::vector<Rational>(s.dim, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (int t = 0; t < s.dim; ++t) diff[i][t] = s.points[i + 1][t] - s.points[0][t];

    std::size_t rank = 0;
    for (int col = 0; col < s.dim && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && diff[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(diff[pivot], diff[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (diff[i][col] == 0) continue;
            Rational factor = diff[i][col] / diff[rank][col];
            for (int t = col; t < s.dim; ++t) diff[i][t] -= factor * diff[rank][t];
        }
        ++rank;
    }
    return rank == rows;
}

namespace {

TheoremReport compare_sets(std::string name, std::vector<std::vector<int>> expected,
                           const PointSet& oracle) {
    std::sort(expected.begin(), expected.end());
    TheoremReport report;
    report.theorem = std::move(name);
    report.expected_count = static_cast<int>(expected.size());
    report.oracle_count = static_cast<int>(oracle.points.size());
    std::set_difference(expected.begin(), expected.end(), oracle.points.begin(),
                        oracle.points.end(), std::back_inserter(report.missing));
    std::set_difference(oracle.points.begin(), oracle.points.end(), expected.begin(),
                        expected.end(), std::back_inserter(report.extra));
    report.match = report.missing.empty() && report.extra.empty();
    return report;
}

}  // namespace

TheoremReport verify_theorem_complete(int n, int jobs) {
    if (n < 1 || n > 8) throw std::invalid_argument("verify_theorem_complete: n must be in [1,8]");
    PointSet oracle = extremal_set(enumerate_enumerators(complete_graph(n)), jobs);
    return compare_sets("en:" + std::to_string(n), vertices_complete_points(n), oracle);
}

TheoremReport verify_theorem_b2(int n, int jobs) {
    if (n < 1 || n > 7) throw std::invalid_argument("verify_theorem_b2: n must be in [1,7]");
    PointSet oracle = extremal_set(enumerate_bi_enumerators(complete_bipartite(2, n)), jobs);
    std::vector<std::vector<int>> expected;
    for (const auto& v : vertices_b2(n)) expected.push_back(v.point.flatten());
    return compare_sets("b2n:" + std::to_string(n), std::move(expected), oracle);
}

}  // namespace degenum
