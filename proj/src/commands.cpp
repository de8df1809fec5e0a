#include "girth/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "girth/approx.hpp"
#include "girth/cycle_search.hpp"
#include "girth/rng.hpp"

namespace girth {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::optional<int> oracle_girth_for(const Graph& g, const OracleOptions& oracle) {
    if (!oracle.enabled) return std::nullopt;
    if (!oracle.force && g.num_vertices() > oracle.cap)
        throw Error("oracle refused: graph has " + std::to_string(g.num_vertices()) +
                    " vertices, above the cap of " + std::to_string(oracle.cap) +
                    " (use the force flag to override)");
    auto exact = exact_girth(g);
    if (!exact) return std::nullopt;
    return exact->girth;
}

// Per-algorithm a-priori bound on the estimate given the true girth.
// Plain sampling has no closed-form guarantee, so those stay empty.
std::optional<long long> guarantee_for(const std::string& algo, int k, int oracle_girth) {
    if (algo == "ir-additive") return oracle_girth + 1;
    if (algo == "theorem1") return subquadratic_guarantee(oracle_girth, k);
    if (algo == "theorem2") return near_linear_guarantee(oracle_girth, k);
    return std::nullopt;
}

struct AlgoRun {
    std::optional<CycleWitness> witness;
    std::uint64_t visited = 0;
    std::optional<std::uint64_t> seed;
    std::optional<int> k;
    std::optional<double> x;
    std::optional<std::uint64_t> y;
};

AlgoRun run_algorithm(const Graph& g, const ApproxParams& p) {
    AlgoRun run;
    if (p.algo == "ir-additive") {
        run.witness = itai_rodeh_additive(g, &run.visited);
    } else if (p.algo == "sample") {
        if (!p.x || !p.y) throw Error("algorithm 'sample' requires --x and --y");
        ApproxResult r = sampled_search(g, *p.x, *p.y, p.seed);
        run.witness = std::move(r.witness);
        run.visited = r.visited_total;
        run.seed = p.seed;
        run.x = p.x;
        run.y = p.y;
    } else if (p.algo == "det-sample") {
        if (!p.x || !p.y) throw Error("algorithm 'det-sample' requires --x and --y");
        ApproxResult r = hitting_set_search(g, *p.x, *p.y);
        run.witness = std::move(r.witness);
        run.visited = r.visited_total;
        run.x = p.x;
        run.y = p.y;
    } else if (p.algo == "theorem1") {
        SubquadraticParams sq;
        sq.k = p.k;
        sq.x = p.x;
        if (p.y) sq.phase2_cap = p.y;
        ApproxResult r = subquadratic_approx(g, sq);
        run.witness = std::move(r.witness);
        run.visited = r.visited_total;
        run.k = p.k;
        if (p.x) run.x = p.x;
        if (p.y) run.y = p.y;
    } else if (p.algo == "theorem2") {
        ApproxResult r = near_linear_approx(g, NearLinearParams{p.k, p.seed});
        run.witness = std::move(r.witness);
        run.visited = r.visited_total;
        run.seed = p.seed;
        run.k = p.k;
    } else {
        throw Error("unknown algorithm '" + p.algo + "'");
    }
    return run;
}

RunReport build_approx_report(const Graph& g, const std::string& input_desc,
                              const ApproxParams& params, const OracleOptions& oracle,
                              double elapsed_ms) {
    AlgoRun run = run_algorithm(g, params);
    RunReport report;
    report.algorithm = params.algo;
    report.k = run.k;
    report.x = run.x;
    report.y = run.y;
    report.seed = run.seed;
    report.input = input_desc;
    if (run.witness) {
        report.girth_estimate = run.witness->length();
        report.cycle = run.witness->vertices;
    }
    report.visited_total = run.visited;
    report.elapsed_ms = elapsed_ms;
    if (auto truth = oracle_girth_for(g, oracle)) {
        report.oracle_girth = truth;
        if (report.girth_estimate)
            report.guarantee_bound = guarantee_for(params.algo, params.k, *truth);
    }
    check_report_invariants(report);
    return report;
}

}  // namespace

RunReport cmd_exact(const std::string& input_path, const TimingOptions& timing) {
    Graph g = load_graph(input_path);
    auto start = Clock::now();
    std::uint64_t visited = 0;
    auto result = exact_girth(g, &visited);
    double elapsed = timing.measure ? ms_since(start) : 0.0;
    RunReport report;
    report.algorithm = "exact";
    report.input = input_path;
    if (result) {
        report.girth_estimate = result->girth;
        report.oracle_girth = result->girth;
        report.cycle = result->witness.vertices;
    }
    report.visited_total = visited;
    report.elapsed_ms = elapsed;
    return report;
}

RunReport cmd_approx(const std::string& input_path, const ApproxParams& params,
                     const OracleOptions& oracle, const TimingOptions& timing) {
    Graph g = load_graph(input_path);
    auto start = Clock::now();
    // elapsed covers the approximation only; the oracle is a harness add-on
    RunReport report = build_approx_report(g, input_path, params, oracle,
                                           timing.measure ? ms_since(start) : 0.0);
    return report;
}

GenOutcome cmd_gen(const GeneratorSpec& spec, const std::string& out_path,
                   const OracleOptions& oracle) {
    Graph g = generate(spec);
    save_graph(g, out_path);
    GenOutcome out;
    out.n = g.num_vertices();
    out.m = g.num_edges();
    if (oracle.enabled) {
        if (!oracle.force && g.num_vertices() > oracle.cap) {
            out.oracle_skipped = true;  // the file is already written; don't fail
        } else {
            auto exact = exact_girth(g);
            if (exact) out.oracle_girth = exact->girth;
        }
    }
    return out;
}

SweepSpec sweep_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad sweep spec: ") + e.what());
    }
    SweepSpec spec;
    try {
        spec.sizes = j.at("sizes").get<std::vector<int>>();
        const auto& gen = j.at("generator");
        spec.generator.model = model_from_string(gen.at("model").get<std::string>());
        if (gen.contains("name")) spec.generator.name = gen["name"].get<std::string>();
        if (gen.contains("p")) spec.generator.p = gen["p"].get<double>();
        if (gen.contains("avg_degree")) spec.generator.avg_degree = gen["avg_degree"].get<double>();
        if (gen.contains("girth")) spec.generator.girth = gen["girth"].get<int>();
        if (gen.contains("depth")) spec.generator.depth = gen["depth"].get<int>();
        if (gen.contains("degree")) spec.generator.degree = gen["degree"].get<int>();
        if (gen.contains("seed")) spec.generator.seed = gen["seed"].get<std::uint64_t>();
        for (const auto& a : j.at("algorithms")) {
            SweepAlgo algo;
            algo.name = a.at("name").get<std::string>();
            if (a.contains("k")) algo.k = a["k"].get<int>();
            spec.algorithms.push_back(algo);
        }
        if (j.contains("seeds_per_point")) spec.seeds_per_point = j["seeds_per_point"].get<int>();
        spec.output = j.at("output").get<std::string>();
        if (j.contains("with_oracle")) spec.with_oracle = j["with_oracle"].get<bool>();
        if (j.contains("oracle_cap")) spec.oracle_cap = j["oracle_cap"].get<int>();
        if (j.contains("threads")) spec.threads = j["threads"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("bad sweep spec: ") + e.what());
    }
    return spec;
}

namespace {

struct SweepCell {
    int size_index = 0;
    int algo_index = 0;
    int rep = 0;
};

struct CellResult {
    std::optional<int> estimate;
    std::optional<int> oracle;
    std::optional<bool> guarantee_ok;
    std::uint64_t visited = 0;
    double elapsed_ms = 0.0;
    std::uint64_t seed = 0;
};

CellResult run_cell(const SweepSpec& spec, const SweepCell& cell) {
    GeneratorSpec gen = spec.generator;
    gen.n = spec.sizes[cell.size_index];
    gen.seed = derive_seed(derive_seed(spec.generator.seed, cell.size_index), cell.rep);
    Graph g = generate(gen);

    const SweepAlgo& algo = spec.algorithms[cell.algo_index];
    CellResult out;
    out.seed = derive_seed(gen.seed, 1000 + cell.algo_index);

    auto start = Clock::now();
    std::optional<CycleWitness> witness;
    if (algo.name == "ir-additive") {
        witness = itai_rodeh_additive(g, &out.visited);
    } else if (algo.name == "theorem1") {
        SubquadraticParams p;
        p.k = algo.k;
        ApproxResult r = subquadratic_approx(g, p);
        witness = std::move(r.witness);
        out.visited = r.visited_total;
    } else if (algo.name == "theorem2") {
        ApproxResult r = near_linear_approx(g, NearLinearParams{algo.k, out.seed});
        witness = std::move(r.witness);
        out.visited = r.visited_total;
    } else {
        throw Error("sweep: unsupported algorithm '" + algo.name + "'");
    }
    out.elapsed_ms = ms_since(start);
    if (witness) out.estimate = witness->length();

    if (spec.with_oracle && g.num_vertices() <= spec.oracle_cap) {
        auto exact = exact_girth(g);
        if (exact) {
            out.oracle = exact->girth;
            if (out.estimate) {
                auto bound = guarantee_for(algo.name, algo.k, exact->girth);
                out.guarantee_ok =
                    *out.estimate >= exact->girth && (!bound || *out.estimate <= *bound);
            }
        }
    }
    return out;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : points) {
        double lx = std::log(x), ly = std::log(std::max(y, 1.0));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(points.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::vector<SlopeSummary> cmd_sweep(const SweepSpec& spec) {
    if (spec.sizes.empty()) throw Error("sweep: sizes must be nonempty");
    if (spec.algorithms.empty()) throw Error("sweep: algorithms must be nonempty");
    if (spec.seeds_per_point < 1) throw Error("sweep: seeds_per_point must be positive");
    if (spec.output.empty()) throw Error("sweep: output path required");

    std::vector<SweepCell> cells;
    for (int si = 0; si < static_cast<int>(spec.sizes.size()); ++si)
        for (int ai = 0; ai < static_cast<int>(spec.algorithms.size()); ++ai)
            for (int rep = 0; rep < spec.seeds_per_point; ++rep)
                cells.push_back({si, ai, rep});

    std::vector<CellResult> results(cells.size());
    std::vector<std::string> errors(cells.size());
    {
        unsigned hw = std::thread::hardware_concurrency();
        int workers = spec.threads > 0 ? spec.threads : static_cast<int>(hw ? hw : 1);
        workers = std::clamp<int>(workers, 1, static_cast<int>(cells.size()));
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                try {
                    results[i] = run_cell(spec, cells[i]);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (!errors[i].empty()) throw Error("sweep cell failed: " + errors[i]);

    std::ofstream csv(spec.output);
    if (!csv) throw Error("cannot write '" + spec.output + "'");
    csv << "n,algo,k,girth_estimate,oracle_girth,guarantee_ok,visited_total,elapsed_ms,seed\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const SweepCell& c = cells[i];
        const CellResult& r = results[i];
        const SweepAlgo& a = spec.algorithms[c.algo_index];
        csv << spec.sizes[c.size_index] << ',' << a.name << ',' << a.k << ','
            << (r.estimate ? std::to_string(*r.estimate) : std::string("acyclic")) << ','
            << (r.oracle ? std::to_string(*r.oracle) : std::string()) << ','
            << (r.guarantee_ok ? std::string(*r.guarantee_ok ? "1" : "0") : std::string()) << ','
            << r.visited << ',' << format_double(r.elapsed_ms) << ',' << r.seed << '\n';
    }

    // per-algorithm log-log slope of the per-size median visited_total
    std::vector<SlopeSummary> summaries;
    if (spec.sizes.size() >= 2) {
        for (int ai = 0; ai < static_cast<int>(spec.algorithms.size()); ++ai) {
            std::vector<std::pair<double, double>> points;
            for (int si = 0; si < static_cast<int>(spec.sizes.size()); ++si) {
                std::vector<std::uint64_t> vals;
                for (std::size_t i = 0; i < cells.size(); ++i)
                    if (cells[i].size_index == si && cells[i].algo_index == ai)
                        vals.push_back(results[i].visited);
                std::sort(vals.begin(), vals.end());
                double median = vals.size() % 2 == 1
                                    ? static_cast<double>(vals[vals.size() / 2])
                                    : 0.5 * (static_cast<double>(vals[vals.size() / 2 - 1]) +
                                             static_cast<double>(vals[vals.size() / 2]));
                points.emplace_back(static_cast<double>(spec.sizes[si]), median);
            }
            SlopeSummary s;
            s.algo = spec.algorithms[ai].name;
            s.k = spec.algorithms[ai].k;
            s.slope = fit_loglog_slope(points);
            summaries.push_back(s);
            csv << "slope," << s.algo << ',' << s.k << ",,,," << format_double(s.slope) << ",,\n";
        }
    }
    if (!csv) throw Error("write failed for '" + spec.output + "'");
    return summaries;
}

}  // namespace girth
