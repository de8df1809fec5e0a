#include "girth/cycle_search.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "girth/detail/search.hpp"

namespace girth {

using detail::Scratch;

bool witness_valid(const Graph& g, const CycleWitness& w) {
    const int len = w.length();
    if (len < 3) return false;
    std::vector<int> sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (sorted.front() < 0 || sorted.back() >= g.num_vertices()) return false;
    for (int i = 0; i < len; ++i)
        if (!g.has_edge(w.vertices[i], w.vertices[(i + 1) % len])) return false;
    return true;
}

struct CycleSearcher::Impl {
    Scratch scratch;
    explicit Impl(int n) : scratch(n) {}
};

CycleSearcher::CycleSearcher(const Graph& g)
    : g_(&g), impl_(std::make_unique<Impl>(g.num_vertices())) {}
CycleSearcher::~CycleSearcher() = default;
CycleSearcher::CycleSearcher(CycleSearcher&&) noexcept = default;
CycleSearcher& CycleSearcher::operator=(CycleSearcher&&) noexcept = default;

SearchOutcome CycleSearcher::search(int root, std::optional<std::uint64_t> bound) {
    if (root < 0 || root >= g_->num_vertices()) throw Error("search root out of range");
    if (bound && *bound == 0) throw Error("search bound must be positive");
    return detail::bfs_cycle_impl([this](int u) { return g_->neighbors(u); }, root, bound,
                                  impl_->scratch);
}

SearchOutcome bfs_cycle(const Graph& g, int root, std::optional<std::uint64_t> bound) {
    CycleSearcher searcher(g);
    return searcher.search(root, bound);
}

int ball_size(const Graph& g, int u, int radius, int cap) {
    if (u < 0 || u >= g.num_vertices()) throw Error("ball_size: vertex out of range");
    if (radius < 0) throw Error("ball_size: radius must be nonnegative");
    if (cap < 1) throw Error("ball_size: cap must be positive");
    Scratch s(g.num_vertices());
    s.begin();
    s.discover(u, -1, 0);
    int count = 1;
    if (count >= cap) return cap;
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        int x = s.queue[head];
        if (s.depth[x] == radius) break;  // deeper vertices fall outside the ball
        for (int v : g.neighbors(x)) {
            if (s.discovered(v)) continue;
            s.discover(v, x, s.depth[x] + 1);
            if (++count >= cap) return cap;
        }
    }
    return count;
}

BallRadiusTable radius_table(const Graph& g, int x, std::uint64_t* dequeues) {
    if (x < 1) throw Error("radius_table: threshold x must be positive");
    const int n = g.num_vertices();
    BallRadiusTable table;
    table.threshold = x;
    table.r.assign(n, 0);
    Scratch s(n);
    std::uint64_t total = 0;
    for (int u = 0; u < n; ++u) {
        s.begin();
        s.discover(u, -1, 0);
        int count = 1;
        int r = 0;
        for (std::size_t head = 0; head < s.queue.size() && count <= x; ++head) {
            int a = s.queue[head];
            ++total;
            for (int v : g.neighbors(a)) {
                if (s.discovered(v)) continue;
                s.discover(v, a, s.depth[a] + 1);
                if (++count > x) {
                    // the (x+1)-th vertex sits at depth[a]+1, so the ball of
                    // radius depth[a] is the last one within the threshold
                    r = s.depth[a];
                    break;
                }
            }
        }
        if (count <= x) r = s.depth[s.queue.back()];  // whole component fits: eccentricity
        table.r[u] = r;
    }
    if (dequeues) *dequeues += total;
    return table;
}

std::optional<GirthResult> exact_girth(const Graph& g, std::uint64_t* dequeues) {
    const int n = g.num_vertices();
    Scratch s(n);
    long long best = std::numeric_limits<long long>::max();
    int best_root = -1, best_a = -1, best_b = -1;
    std::uint64_t total = 0;
    for (int root = 0; root < n; ++root) {
        s.begin();
        s.discover(root, -1, 0);
        for (std::size_t head = 0; head < s.queue.size(); ++head) {
            int a = s.queue[head];
            ++total;
            for (int v : g.neighbors(a)) {
                if (!s.discovered(v)) {
                    s.discover(v, a, s.depth[a] + 1);
                } else if (v != s.parent[a]) {
                    long long cand = static_cast<long long>(s.depth[a]) + s.depth[v] + 1;
                    if (cand < best) {
                        best = cand;
                        best_root = root;
                        best_a = a;
                        best_b = v;
                    }
                }
            }
        }
    }
    if (dequeues) *dequeues += total;
    if (best_root < 0) return std::nullopt;

    // rebuild the minimizing root's tree to materialize the witness
    s.begin();
    s.discover(best_root, -1, 0);
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        int a = s.queue[head];
        for (int v : g.neighbors(a))
            if (!s.discovered(v)) s.discover(v, a, s.depth[a] + 1);
    }
    CycleWitness w = detail::close_tree_cycle(s, best_a, best_b);
    // at the global minimum the closed cycle cannot be shorter than the
    // candidate value, so its length is exactly the girth
    assert(w.length() == best);
    return GirthResult{static_cast<int>(best), std::move(w)};
}

std::optional<int> girth_edge_oracle(const Graph& g) {
    const int n = g.num_vertices();
    Scratch s(n);
    long long best = std::numeric_limits<long long>::max();
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            // BFS from u in G minus the edge (u,v); stop once v is dequeued
            s.begin();
            s.discover(u, -1, 0);
            for (std::size_t head = 0; head < s.queue.size(); ++head) {
                int a = s.queue[head];
                if (a == v) break;
                if (static_cast<long long>(s.depth[a]) + 1 >= best) break;
                for (int b : g.neighbors(a)) {
                    if (a == u && b == v) continue;
                    if (!s.discovered(b)) s.discover(b, a, s.depth[a] + 1);
                }
            }
            if (s.discovered(v)) best = std::min(best, static_cast<long long>(s.depth[v]) + 1);
        }
    }
    if (best == std::numeric_limits<long long>::max()) return std::nullopt;
    return static_cast<int>(best);
}

std::optional<CycleWitness> itai_rodeh_additive(const Graph& g, std::uint64_t* dequeues) {
    const int n = g.num_vertices();
    Scratch s(n);
    std::optional<CycleWitness> best;
    std::uint64_t total = 0;
    for (int root = 0; root < n; ++root) {
        auto out =
            detail::bfs_cycle_impl([&g](int u) { return g.neighbors(u); }, root, std::nullopt, s);
        total += out.visited;
        if (out.witness && (!best || out.witness->length() < best->length()))
            best = std::move(out.witness);
    }
    if (dequeues) *dequeues += total;
    return best;
}

}  // namespace girth
