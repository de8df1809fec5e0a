#include "girth/approx.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "girth/detail/search.hpp"
#include "girth/hitting_set.hpp"
#include "girth/rng.hpp"

namespace girth {

namespace {

void offer(std::optional<CycleWitness>& best, std::optional<CycleWitness> candidate) {
    if (candidate && (!best || candidate->length() < best->length()))
        best = std::move(candidate);
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_global;
};

// Ascending global ids map to ascending local ids, so local adjacency stays
// sorted and searches on the subgraph behave exactly like on the original.
InducedSubgraph induce(const Graph& g, const std::vector<int>& comp_id, int label) {
    InducedSubgraph sub;
    std::vector<int> to_local(g.num_vertices(), -1);
    for (int u = 0; u < g.num_vertices(); ++u)
        if (comp_id[u] == label) {
            to_local[u] = static_cast<int>(sub.to_global.size());
            sub.to_global.push_back(u);
        }
    EdgeList list;
    list.n = static_cast<int>(sub.to_global.size());
    for (int u : sub.to_global)
        for (int v : g.neighbors(u))
            if (u < v && comp_id[v] == label) list.edges.emplace_back(to_local[u], to_local[v]);
    sub.graph = build_graph(list);
    return sub;
}

double default_threshold(int n, int k) {
    double raw = std::pow(n * std::log(static_cast<double>(n)), 1.0 / k);
    return std::max(2.0, std::round(raw));
}

// Core of the two-phase scheme on a connected cyclic graph.
ApproxResult subquadratic_connected(const Graph& g, const SubquadraticParams& params) {
    const int n = g.num_vertices();
    const int k = params.k;
    const double x = params.x ? *params.x : default_threshold(n, k);
    // one integer threshold shared by the hitting sets and the radius table,
    // so the phase-1 cover argument and the phase-2 ball bounds line up
    const long long xi = std::max<long long>(2, static_cast<long long>(std::ceil(x)));

    ApproxResult result;

    // phase 1: hitting-set pass with unbounded searches
    ApproxResult phase1 =
        hitting_set_search(g, n * std::log(static_cast<double>(n)) / xi, n);
    result.visited_total += phase1.visited_total;
    offer(result.witness, std::move(phase1.witness));

    // phase 2: searches on the incrementally grown subgraph
    std::uint64_t cap;
    if (params.phase2_cap) {
        cap = *params.phase2_cap;
    } else {
        double by_budget = std::ceil(n * std::log(static_cast<double>(n)) / xi);
        double by_ball = std::pow(static_cast<double>(xi), k - 1);
        cap = static_cast<std::uint64_t>(std::min(std::max(by_budget, std::ceil(by_ball)),
                                                  static_cast<double>(n)));
    }
    if (cap == 0) cap = 1;

    BallRadiusTable table = radius_table(g, static_cast<int>(std::min<long long>(xi, n)),
                                         &result.visited_total);
    std::vector<int> order(n);
    for (int u = 0; u < n; ++u) order[u] = u;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (table.r[a] != table.r[b]) return table.r[a] > table.r[b];
        return a < b;
    });

    std::vector<std::vector<int>> inc_adj(n);
    std::vector<char> added(n, 0);
    detail::Scratch scratch(n);
    for (int u : order) {
        if (table.r[u] == 0) break;  // the rest have radius zero too
        for (int v : g.neighbors(u)) {
            if (!added[v]) continue;
            inc_adj[u].push_back(v);
            inc_adj[v].push_back(u);
        }
        added[u] = 1;
#ifndef NDEBUG
        // the incremental graph must stay exactly the induced subgraph on
        // the processed prefix; recheck on small inputs
        if (n <= 64) {
            for (int a = 0; a < n; ++a) {
                if (!added[a]) continue;
                for (int b = 0; b < n; ++b) {
                    if (!added[b] || a == b) continue;
                    bool in_inc = std::find(inc_adj[a].begin(), inc_adj[a].end(), b) !=
                                  inc_adj[a].end();
                    assert(in_inc == g.has_edge(a, b));
                }
            }
        }
#endif
        auto out = detail::bfs_cycle_impl(
            [&inc_adj](int w) -> const std::vector<int>& { return inc_adj[w]; }, u, cap, scratch);
        result.visited_total += out.visited;
        offer(result.witness, std::move(out.witness));
    }
    return result;
}

}  // namespace

ApproxResult sampled_search(const Graph& g, double x, std::uint64_t y, std::uint64_t seed) {
    if (!(x > 0)) throw Error("sampled_search: x must be positive");
    if (y == 0) throw Error("sampled_search: y must be positive");
    const int n = g.num_vertices();
    ApproxResult result;
    result.seed = seed;
    if (n == 0) return result;
    const double p = std::min(x / n, 1.0);
    SplitMix64 rng(seed);
    CycleSearcher searcher(g);
    for (int v = 0; v < n; ++v) {
        if (rng.next_unit() >= p) continue;
        auto out = searcher.search(v, y);
        result.visited_total += out.visited;
        offer(result.witness, std::move(out.witness));
    }
    return result;
}

ApproxResult hitting_set_search(const Graph& g, double x, std::uint64_t y) {
    if (!(x > 0)) throw Error("hitting_set_search: x must be positive");
    if (y == 0) throw Error("hitting_set_search: y must be positive");
    const int n = g.num_vertices();
    ApproxResult result;
    if (n == 0) return result;
    long long want = static_cast<long long>(std::ceil(n * std::log(static_cast<double>(n)) / x));
    int set_size = static_cast<int>(std::clamp<long long>(want, 1, n));
    SetSystem sys = detail::closest_node_sets_padded(g, set_size, &result.visited_total);
    HittingSet hs = detail::greedy_core(sys);
    CycleSearcher searcher(g);
    for (int u : hs.elements) {
        auto out = searcher.search(u, y);
        result.visited_total += out.visited;
        offer(result.witness, std::move(out.witness));
    }
    return result;
}

ApproxResult subquadratic_approx(const Graph& g, const SubquadraticParams& params) {
    if (params.k < 2) throw Error("subquadratic_approx: k must be at least 2");
    if (params.x && !(*params.x >= 1)) throw Error("subquadratic_approx: x must be >= 1");
    Components comps = components(g);
    std::vector<long long> verts(comps.count, 0), half_edges(comps.count, 0);
    for (int u = 0; u < g.num_vertices(); ++u) {
        ++verts[comps.id[u]];
        half_edges[comps.id[u]] += g.degree(u);
    }
    ApproxResult result;
    for (int label = 0; label < comps.count; ++label) {
        if (half_edges[label] / 2 < verts[label]) continue;  // tree component
        InducedSubgraph sub = induce(g, comps.id, label);
        ApproxResult local = subquadratic_connected(sub.graph, params);
        result.visited_total += local.visited_total;
        if (local.witness) {
            for (int& v : local.witness->vertices) v = sub.to_global[v];
            offer(result.witness, std::move(local.witness));
        }
    }
    return result;
}

ApproxResult near_linear_approx(const Graph& g, const NearLinearParams& params) {
    if (params.k < 2) throw Error("near_linear_approx: k must be at least 2");
    if (params.k > 40) throw Error("near_linear_approx: k too large");
    const int n = g.num_vertices();
    ApproxResult result;
    result.seed = params.seed;
    if (n < 3) return result;
    const double logn = std::log(static_cast<double>(n));
    for (int i = 1; i <= params.k; ++i) {
        double xi = std::pow(n, 1.0 + (1.0 - i) / params.k) * logn;
        auto yi = static_cast<std::uint64_t>(std::ceil(std::pow(n, static_cast<double>(i) / params.k)));
        ApproxResult round = sampled_search(g, xi, yi, derive_seed(params.seed, i));
        result.visited_total += round.visited_total;
        offer(result.witness, std::move(round.witness));
    }
    return result;
}

long long subquadratic_guarantee(long long g, int k) {
    if (g < 1 || k < 2) throw Error("subquadratic_guarantee: needs g >= 1, k >= 2");
    long long half = (g + 1) / 2;
    long long stretch = (g + 2LL * (k - 1) - 1) / (2LL * (k - 1));
    return 2 * half + 2 * stretch;
}

long long near_linear_guarantee(long long g, int k) {
    if (g < 1 || k < 2 || k > 40) throw Error("near_linear_guarantee: needs g >= 1, 2 <= k <= 40");
    return (1LL << k) * ((g + 1) / 2);
}

LargeGirthParams large_girth_params(int l) {
    if (l < 1) throw Error("large_girth_params: l must be positive");
    LargeGirthParams out;
    out.k = 2 * l - (l + 2) / 3 + 2;  // (l+2)/3 == ceil(l/3)
    out.ratio_num = 2LL * l + 4;      // ratio 1 + 3/(2l+1)
    out.ratio_den = 2LL * l + 1;
    long long g = std::gcd(out.ratio_num, out.ratio_den);
    out.ratio_num /= g;
    out.ratio_den /= g;
    return out;
}

bool verify_large_girth_guarantee(int l_max, int g_max) {
    if (l_max < 1 || g_max < 1) throw Error("verify_large_girth_guarantee: bad range");
    for (int l = 1; l <= l_max; ++l) {
        LargeGirthParams p = large_girth_params(l);
        for (long long g = 2LL * l; g <= g_max; ++g) {
            // bound/g <= num/den, in exact integers
            if (subquadratic_guarantee(g, p.k) * p.ratio_den > p.ratio_num * g) return false;
        }
    }
    return true;
}

}  // namespace girth
