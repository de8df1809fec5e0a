#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "girth/graph.hpp"

namespace girth {

// An explicit simple cycle: consecutive vertices (cyclically) are adjacent
// in the graph the witness came from, all vertices distinct, length >= 3.
struct CycleWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness&) const = default;
};

bool witness_valid(const Graph& g, const CycleWitness& w);

struct SearchOutcome {
    std::optional<CycleWitness> witness;
    std::uint64_t visited = 0;  // dequeued vertices
};

// Breadth-first search from root in adjacency order that stops at the first
// non-tree edge scanned (an edge (x,v) with v already discovered and v not
// the parent of x) and returns the tree cycle it closes. With a bound, at
// most `bound` vertices are dequeued; running out of budget or running out
// of graph yields no witness.
//
// If a vertex at distance l from root lies on a simple cycle of length c
// that the budget can fully explore, the witness length is at most
// 2*ceil(c/2) + 2*l.
SearchOutcome bfs_cycle(const Graph& g, int root,
                        std::optional<std::uint64_t> bound = std::nullopt);

// Reusable workspace for running many searches on one graph without paying
// a fresh O(n) setup per root.
class CycleSearcher {
public:
    explicit CycleSearcher(const Graph& g);
    ~CycleSearcher();
    CycleSearcher(CycleSearcher&&) noexcept;
    CycleSearcher& operator=(CycleSearcher&&) noexcept;

    SearchOutcome search(int root, std::optional<std::uint64_t> bound = std::nullopt);

private:
    struct Impl;
    const Graph* g_;
    std::unique_ptr<Impl> impl_;
};

// min(|B(u, radius)|, cap) via truncated BFS; dequeues at most cap vertices.
int ball_size(const Graph& g, int u, int radius, int cap);

struct BallRadiusTable {
    std::vector<int> r;  // per vertex: largest r with |B(u,r)| <= threshold
    int threshold = 0;
};

// For every vertex, the largest radius whose ball still holds at most x
// vertices, capped by the vertex's eccentricity within its component. Each
// per-vertex search stops as soon as the (x+1)-th vertex is discovered.
BallRadiusTable radius_table(const Graph& g, int x, std::uint64_t* dequeues = nullptr);

struct GirthResult {
    int girth = 0;
    CycleWitness witness;
};

// Exact girth by full BFS from every vertex, minimizing d(u,a)+d(u,b)+1
// over all non-tree edges (a,b). Ties across roots go to the smallest root
// id, so the witness is stable. Returns nothing on forests.
std::optional<GirthResult> exact_girth(const Graph& g, std::uint64_t* dequeues = nullptr);

// Independent second oracle: delete each edge (u,v) in turn and measure
// d(u,v) in the remaining graph; the girth is the minimum d(u,v)+1. Slower
// than exact_girth and used to cross-check it in tests.
std::optional<int> girth_edge_oracle(const Graph& g);

// Classic additive +1 baseline: the best stop-early search over all roots.
// Returns a witness of length in [g, g+1], or nothing on forests.
std::optional<CycleWitness> itai_rodeh_additive(const Graph& g,
                                                std::uint64_t* dequeues = nullptr);

}  // namespace girth
