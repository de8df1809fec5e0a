#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "girth/graph.hpp"

namespace girth {

enum class GraphModel {
    CycleWithPendantTrees,  // one g-cycle plus random trees hung off it; girth is exactly g
    Gnp,                    // Erdos-Renyi G(n, p)
    Named,                  // fixed small graphs by name
    RandomRegular,          // pairing model, retried until simple
};

struct GeneratorSpec {
    GraphModel model = GraphModel::Named;
    // cycle-with-pendant-trees
    int girth = 0;
    int depth = 0;
    // gnp / random-regular / named "cycle"
    int n = 0;
    double p = 0.0;
    std::optional<double> avg_degree;  // gnp alternative to p: p = avg_degree / n
    int degree = 0;
    // named: triangle, k4, petersen, heawood, grid3x3, q4, cycle
    std::string name;
    std::uint64_t seed = 0;

    std::string describe() const;
};

GraphModel model_from_string(const std::string& s);
std::string model_to_string(GraphModel m);

// Deterministic in the spec: equal specs yield bit-identical graphs.
Graph generate(const GeneratorSpec& spec);

}  // namespace girth
