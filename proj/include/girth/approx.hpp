#pragma once

#include <cstdint>
#include <optional>

#include "girth/cycle_search.hpp"
#include "girth/graph.hpp"

namespace girth {

struct ApproxResult {
    std::optional<CycleWitness> witness;
    // A-priori bound on the witness length given the true girth; filled in
    // by the reporting layer once an oracle girth is available.
    std::optional<long long> guarantee_bound;
    std::uint64_t visited_total = 0;  // dequeued vertices across all searches
    std::optional<std::uint64_t> seed;

    std::optional<int> estimate() const {
        if (!witness) return std::nullopt;
        return witness->length();
    }
};

// Samples each vertex independently with probability min(x/n, 1) and runs a
// stop-early search with dequeue budget y from every sampled vertex.
// Expected cost O(n + x*y). Deterministic given the seed.
ApproxResult sampled_search(const Graph& g, double x, std::uint64_t y, std::uint64_t seed);

// Deterministic variant: builds the n sets of the ceil(n*ln(n)/x) closest
// vertices, hits them all with the greedy hitting set, and searches from the
// chosen vertices with budget y. Cost O(n^2 ln n / x + x*y). Components too
// small for the set size contribute whole-component sets.
ApproxResult hitting_set_search(const Graph& g, double x, std::uint64_t y);

struct SubquadraticParams {
    int k = 2;
    // Ball threshold; defaults to (n ln n)^{1/k} rounded, at least 2,
    // recomputed per component.
    std::optional<double> x;
    // Dequeue budget of the incremental-graph searches; defaults to
    // max(ceil(n ln n / x), ceil(x^{k-1})).
    std::optional<std::uint64_t> phase2_cap;
};

// Two-phase deterministic scheme: a hitting-set pass with unbounded
// searches, then bounded searches on an incrementally grown subgraph that
// admits vertices in order of decreasing ball radius r(u). For true girth g
// the witness length is at most subquadratic_guarantee(g, k); runs in
// O(n^{2-1/k}) up to log factors at the default threshold. Disconnected
// inputs are handled per component (best witness over components).
ApproxResult subquadratic_approx(const Graph& g, const SubquadraticParams& params);

struct NearLinearParams {
    int k = 2;
    std::uint64_t seed = 0;
};

// Randomized near-linear scheme: k sampled-search rounds with geometrically
// traded sample counts and budgets. With probability at least 1 - 1/n the
// witness length is at most near_linear_guarantee(g, k); expected cost
// O(n^{1+1/k} k ln n). Round seeds derive from the master seed.
ApproxResult near_linear_approx(const Graph& g, const NearLinearParams& params);

// 2*ceil(g/2) + 2*ceil(g/(2(k-1))): the deterministic scheme's length bound.
long long subquadratic_guarantee(long long g, int k);

// 2^k * ceil(g/2): the randomized scheme's length bound.
long long near_linear_guarantee(long long g, int k);

struct LargeGirthParams {
    int k = 0;
    long long ratio_num = 0;  // approximation ratio 1 + 3/(2l+1), exact
    long long ratio_den = 0;
};

// For graphs of girth > 2l-1: the k achieving a (1 + 3/(2l+1))-approximation.
LargeGirthParams large_girth_params(int l);

// Exhaustive exact-arithmetic check that subquadratic_guarantee(g, k(l))
// stays within ratio 1 + 3/(2l+1) for all l <= l_max and 2l <= g <= g_max.
bool verify_large_girth_guarantee(int l_max, int g_max);

}  // namespace girth
