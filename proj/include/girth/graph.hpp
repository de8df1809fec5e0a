#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "girth/error.hpp"

namespace girth {

// Raw parse product of an edge-list file. May still contain duplicates and
// self-loops; validation happens in build_graph.
struct EdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool operator==(const EdgeList&) const = default;
};

// Immutable undirected simple graph in compressed adjacency form. Neighbor
// lists are sorted ascending, and that order is load-bearing: every search
// in this library breaks ties by adjacency order, so two equal Graph values
// produce bit-identical results everywhere downstream.
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    std::span<const int> neighbors(int u) const {
        return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
    }
    int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;

    friend Graph build_graph(const EdgeList& list);

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<int> offsets_;  // size n+1
    std::vector<int> adj_;      // size 2m, each per-vertex slice ascending
};

// Parses newline-delimited "u v" pairs. '#' starts a comment line; an
// optional first line "p <n> <m>" declares sizes. The effective vertex
// count is max(declared n, 1 + highest vertex id seen).
EdgeList parse_edge_list(std::istream& in);
EdgeList parse_edge_list(const std::string& text);

// Collapses duplicate edges, symmetrizes, sorts each adjacency list
// ascending. Self-loops are rejected (cycle lengths here start at 3).
Graph build_graph(const EdgeList& list);

Graph load_graph(const std::string& path);

// Canonical text form: "p n m" header, then one "u v" line per edge with
// u < v, sorted lexicographically. parse/build of this text reproduces the
// graph exactly.
std::string serialize_edge_list(const Graph& g);
void save_graph(const Graph& g, const std::string& path);

// Checks the representation invariants (sorted simple symmetric adjacency,
// consistent m). Throws Error on violation; used by tests and generators.
void validate_graph(const Graph& g);

struct Connectivity {
    bool is_connected = false;
    bool has_cycle = false;
};

// Single traversal; a component with at least as many edges as vertices
// contains a cycle. The empty graph counts as connected.
Connectivity connected_and_cyclic(const Graph& g);

struct Components {
    int count = 0;
    std::vector<int> id;  // component label per vertex, by discovery from vertex 0
};

Components components(const Graph& g);

}  // namespace girth
