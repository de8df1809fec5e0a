#pragma once

#include <cstdint>
#include <vector>

#include "girth/graph.hpp"

namespace girth {

struct SetSystem {
    int universe_size = 0;
    std::vector<std::vector<int>> sets;  // element ids < universe_size, distinct within a set
};

struct HittingSet {
    std::vector<int> elements;    // in pick order
    std::vector<int> covered_by;  // per input set: the chosen element that hit it
    std::uint64_t ops = 0;        // structural operation counter, O(k*x + n) total
};

// ceil((n/x) * ln k): the guaranteed size bound for uniform systems with
// k >= 2 sets of size x over n elements.
std::uint64_t hitting_set_size_bound(int n, int x, int k);

// Greedy maximum-multiplicity hitting set over a uniform system (all sets
// the same size x >= 1). Ties break to the smallest element id. Runs in
// O(k*x + n) structural operations via multiplicity buckets, a descending
// level pointer, and decrement-moves as sets retire.
HittingSet greedy_hitting_set(const SetSystem& sys);

// For each vertex, the `size` closest vertices (the vertex itself first),
// collected by truncated BFS in adjacency order. Errors if some component
// has fewer than `size` vertices, identifying it by its smallest vertex id.
SetSystem closest_node_sets(const Graph& g, int size, std::uint64_t* dequeues = nullptr);

namespace detail {

// Same greedy, but without the uniform-size validation; used internally
// where small components force padded (shorter) sets.
HittingSet greedy_core(const SetSystem& sys);

// closest_node_sets that pads: a component smaller than `size` contributes
// whole-component sets instead of erroring.
SetSystem closest_node_sets_padded(const Graph& g, int size, std::uint64_t* dequeues = nullptr);

}  // namespace detail

}  // namespace girth
