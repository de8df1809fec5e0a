#include "girth/generate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "girth/rng.hpp"

namespace girth {

namespace {

Graph from_pairs(int n, std::vector<std::pair<int, int>> edges) {
    EdgeList list;
    list.n = n;
    list.edges = std::move(edges);
    return build_graph(list);
}

Graph make_cycle(int n) {
    if (n < 3) throw Error("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_pairs(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return from_pairs(n, std::move(edges));
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return from_pairs(10, std::move(edges));
}

Graph make_heawood() {
    // LCF [5,-5]^7: a 14-cycle plus a chord i -- i+5 from every even vertex
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
    return from_pairs(14, std::move(edges));
}

Graph make_grid3x3() {
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int v = 3 * r + c;
            if (c + 1 < 3) edges.emplace_back(v, v + 1);
            if (r + 1 < 3) edges.emplace_back(v, v + 3);
        }
    return from_pairs(9, std::move(edges));
}

Graph make_hypercube4() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 16; ++u)
        for (int b = 0; b < 4; ++b) {
            int v = u ^ (1 << b);
            if (u < v) edges.emplace_back(u, v);
        }
    return from_pairs(16, std::move(edges));
}

Graph make_named(const GeneratorSpec& spec) {
    const std::string& name = spec.name;
    if (name == "triangle") return make_cycle(3);
    if (name == "k4") return make_complete(4);
    if (name == "petersen") return make_petersen();
    if (name == "heawood") return make_heawood();
    if (name == "grid3x3") return make_grid3x3();
    if (name == "q4") return make_hypercube4();
    if (name == "cycle") return make_cycle(spec.n);
    throw Error("unknown named graph '" + name + "'");
}

Graph make_gnp(const GeneratorSpec& spec) {
    const int n = spec.n;
    if (n < 0) throw Error("gnp needs n >= 0");
    double p = spec.p;
    if (spec.avg_degree) p = (n > 0) ? std::min(1.0, *spec.avg_degree / n) : 0.0;
    if (p < 0.0 || p > 1.0) throw Error("gnp needs p in [0,1]");
    std::vector<std::pair<int, int>> edges;
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (p >= 1.0) return make_complete(n);
    if (p > 0.0 && total > 0) {
        // geometric skips over the lexicographic pair sequence
        SplitMix64 rng(spec.seed);
        const double log1mp = std::log1p(-p);
        long long idx = -1;
        int u = 0;
        long long row_start = 0;  // linear index of pair (u, u+1)
        for (;;) {
            double unit = rng.next_unit();
            long long skip = 1 + static_cast<long long>(std::floor(std::log1p(-unit) / log1mp));
            if (skip < 1) skip = 1;
            idx += skip;
            if (idx >= total) break;
            while (idx - row_start >= n - 1 - u) {
                row_start += n - 1 - u;
                ++u;
            }
            int v = u + 1 + static_cast<int>(idx - row_start);
            edges.emplace_back(u, v);
        }
    }
    return from_pairs(n, std::move(edges));
}

Graph make_pendant_trees(const GeneratorSpec& spec) {
    if (spec.girth < 3) throw Error("cycle-with-pendant-trees needs g >= 3");
    if (spec.depth < 0) throw Error("cycle-with-pendant-trees needs depth >= 0");
    const int g = spec.girth;
    SplitMix64 rng(spec.seed);
    std::vector<std::pair<int, int>> edges;
    int next_id = g;
    for (int i = 0; i < g; ++i) edges.emplace_back(i, (i + 1) % g);
    // hang a tree off every cycle vertex; trees cannot shorten the cycle,
    // so the girth stays exactly g
    for (int c = 0; c < g; ++c) {
        std::vector<int> frontier{c};
        for (int level = 0; level < spec.depth; ++level) {
            std::vector<int> next;
            for (int node : frontier) {
                int children = 1 + static_cast<int>(rng.next_below(2));
                for (int j = 0; j < children; ++j) {
                    edges.emplace_back(node, next_id);
                    next.push_back(next_id++);
                }
            }
            frontier = std::move(next);
        }
    }
    return from_pairs(next_id, std::move(edges));
}

Graph make_random_regular(const GeneratorSpec& spec) {
    const int n = spec.n;
    const int d = spec.degree;
    if (n < 0 || d < 0 || d >= std::max(n, 1))
        throw Error("random-regular needs 0 <= d < n");
    if (static_cast<long long>(n) * d % 2 != 0)
        throw Error("random-regular infeasible: n*d must be even");
    if (d == 0) return from_pairs(n, {});
    SplitMix64 rng(spec.seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < d; ++j) stubs[static_cast<std::size_t>(u) * d + j] = u;
    for (int attempt = 0; attempt < 500; ++attempt) {
        for (std::size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.next_below(i + 1)]);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.emplace(std::min(u, v), std::max(u, v)).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<std::pair<int, int>> edges(seen.begin(), seen.end());
        return from_pairs(n, std::move(edges));
    }
    throw Error("random-regular: no simple pairing found after 500 attempts");
}

}  // namespace

GraphModel model_from_string(const std::string& s) {
    if (s == "cycle-with-pendant-trees") return GraphModel::CycleWithPendantTrees;
    if (s == "gnp") return GraphModel::Gnp;
    if (s == "named") return GraphModel::Named;
    if (s == "random-regular") return GraphModel::RandomRegular;
    throw Error("unknown generator model '" + s + "'");
}

std::string model_to_string(GraphModel m) {
    switch (m) {
        case GraphModel::CycleWithPendantTrees: return "cycle-with-pendant-trees";
        case GraphModel::Gnp: return "gnp";
        case GraphModel::Named: return "named";
        case GraphModel::RandomRegular: return "random-regular";
    }
    return "?";
}

std::string GeneratorSpec::describe() const {
    switch (model) {
        case GraphModel::Named:
            return name == "cycle" ? "named:cycle(n=" + std::to_string(n) + ")" : "named:" + name;
        case GraphModel::Gnp: {
            std::string ps = avg_degree ? "avg_degree=" + std::to_string(*avg_degree)
                                        : "p=" + std::to_string(p);
            return "gnp(n=" + std::to_string(n) + "," + ps + ",seed=" + std::to_string(seed) + ")";
        }
        case GraphModel::CycleWithPendantTrees:
            return "cycle-with-pendant-trees(g=" + std::to_string(girth) +
                   ",depth=" + std::to_string(depth) + ",seed=" + std::to_string(seed) + ")";
        case GraphModel::RandomRegular:
            return "random-regular(n=" + std::to_string(n) + ",d=" + std::to_string(degree) +
                   ",seed=" + std::to_string(seed) + ")";
    }
    return "?";
}

Graph generate(const GeneratorSpec& spec) {
    switch (spec.model) {
        case GraphModel::Named: return make_named(spec);
        case GraphModel::Gnp: return make_gnp(spec);
        case GraphModel::CycleWithPendantTrees: return make_pendant_trees(spec);
        case GraphModel::RandomRegular: return make_random_regular(spec);
    }
    throw Error("unknown generator model");
}

}  // namespace girth
