#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girth/generate.hpp"
#include "girth/graph.hpp"
#include "girth/report.hpp"

namespace girth {

struct OracleOptions {
    bool enabled = false;
    int cap = 5000;     // exact girth is O(nm); refuse above this many vertices
    bool force = false; // override the cap
};

struct TimingOptions {
    bool measure = true;  // false pins elapsed_ms to 0 for reproducible reports
};

// Exact girth of the graph at `input_path`; the estimate doubles as oracle.
RunReport cmd_exact(const std::string& input_path, const TimingOptions& timing = {});

struct ApproxParams {
    std::string algo;  // ir-additive | sample | det-sample | theorem1 | theorem2
    int k = 2;
    std::optional<double> x;
    std::optional<std::uint64_t> y;
    std::uint64_t seed = 0;
};

// Runs the named approximation. With the oracle enabled, fills oracle_girth
// and the algorithm's guarantee bound and enforces the sandwich invariant
// (throws GuaranteeViolation on breach).
RunReport cmd_approx(const std::string& input_path, const ApproxParams& params,
                     const OracleOptions& oracle = {}, const TimingOptions& timing = {});

struct GenOutcome {
    int n = 0;
    long long m = 0;
    bool oracle_skipped = false;        // requested but the graph exceeds the cap
    std::optional<int> oracle_girth;    // absent also when the output is acyclic
};

// Generates a graph and writes its canonical edge-list text to out_path.
// The oracle girth is computed when requested and within the size cap.
GenOutcome cmd_gen(const GeneratorSpec& spec, const std::string& out_path,
                   const OracleOptions& oracle = {});

struct SweepAlgo {
    std::string name;  // ir-additive | theorem1 | theorem2
    int k = 2;
};

struct SweepSpec {
    std::vector<int> sizes;
    GeneratorSpec generator;  // template; n and seed are filled per cell
    std::vector<SweepAlgo> algorithms;
    int seeds_per_point = 1;
    std::string output;  // CSV path
    bool with_oracle = false;
    int oracle_cap = 5000;
    int threads = 0;  // 0 = hardware concurrency
};

struct SlopeSummary {
    std::string algo;
    int k = 0;
    double slope = 0.0;  // log-log fit of per-size median visited_total vs n
};

SweepSpec sweep_spec_from_json(const std::string& text);

// Runs all (size, algorithm, seed) cells on a worker pool and writes one CSV
// row per cell in deterministic order, followed by one slope summary row per
// algorithm. Returns the summaries.
std::vector<SlopeSummary> cmd_sweep(const SweepSpec& spec);

}  // namespace girth
