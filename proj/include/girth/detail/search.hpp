#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "girth/cycle_search.hpp"

namespace girth::detail {

// Timestamped BFS workspace: begin() is O(1), so a sweep of many searches
// costs O(total work) rather than O(n) per reset.
struct Scratch {
    std::vector<int> parent, depth, seen, queue;
    int epoch = 0;

    explicit Scratch(int n) : parent(n, -1), depth(n, 0), seen(n, 0) { queue.reserve(n); }

    void begin() {
        ++epoch;
        queue.clear();
    }
    bool discovered(int v) const { return seen[v] == epoch; }
    void discover(int v, int par, int d) {
        seen[v] = epoch;
        parent[v] = par;
        depth[v] = d;
        queue.push_back(v);
    }
};

// Closes the cycle across the non-tree edge (x, v): both tree paths up to
// the lowest common ancestor plus the edge itself. Output order is
// x .. lca .. v, so the closing edge is (v, x).
inline CycleWitness close_tree_cycle(const Scratch& s, int x, int v) {
    std::vector<int> a{x}, b{v};
    int pa = x, pb = v;
    while (s.depth[pa] > s.depth[pb]) a.push_back(pa = s.parent[pa]);
    while (s.depth[pb] > s.depth[pa]) b.push_back(pb = s.parent[pb]);
    while (pa != pb) {
        a.push_back(pa = s.parent[pa]);
        b.push_back(pb = s.parent[pb]);
    }
    a.insert(a.end(), b.rbegin() + 1, b.rend());  // skip the shared lca
    return CycleWitness{std::move(a)};
}

// Stop-early BFS over any adjacency accessor (adj(u) must yield an iterable
// of neighbor ids in a deterministic order).
template <typename AdjFn>
SearchOutcome bfs_cycle_impl(AdjFn&& adj, int root, std::optional<std::uint64_t> bound,
                             Scratch& s) {
    const std::uint64_t limit = bound ? *bound : std::numeric_limits<std::uint64_t>::max();
    s.begin();
    s.discover(root, -1, 0);
    std::uint64_t dequeued = 0;
    for (std::size_t head = 0; head < s.queue.size(); ++head) {
        if (dequeued == limit) break;
        int x = s.queue[head];
        ++dequeued;
        for (int v : adj(x)) {
            if (!s.discovered(v)) {
                s.discover(v, x, s.depth[x] + 1);
            } else if (v != s.parent[x]) {
                return {close_tree_cycle(s, x, v), dequeued};
            }
        }
    }
    return {std::nullopt, dequeued};
}

}  // namespace girth::detail
