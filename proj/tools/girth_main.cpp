#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "girth/commands.hpp"

namespace {

// exit codes: 0 ok, 1 usage/parse/io, 2 guarantee violation
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

void emit_report(const girth::RunReport& report, const std::string& json_path) {
    std::string text = girth::report_to_json(report);
    std::cout << text;
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw girth::Error("cannot write '" + json_path + "'");
        out << text;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw girth::Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"girth: exact and approximate shortest-cycle computation"};
    app.require_subcommand(1);

    // exact
    auto* exact = app.add_subcommand("exact", "exact girth by n breadth-first searches");
    std::string exact_input, exact_json;
    bool exact_no_timing = false;
    exact->add_option("input", exact_input, "edge-list file")->required();
    exact->add_option("--json", exact_json, "also write the report to this file");
    exact->add_flag("--no-timing", exact_no_timing, "report elapsed_ms as 0 for reproducible output");

    // approx
    auto* approx = app.add_subcommand("approx", "approximate girth");
    std::string approx_input, approx_json, algo;
    girth::ApproxParams params;
    girth::OracleOptions oracle;
    bool approx_no_timing = false;
    approx->add_option("input", approx_input, "edge-list file")->required();
    approx
        ->add_option("--algo", algo,
                     "one of: ir-additive, sample, det-sample, theorem1, theorem2")
        ->required();
    approx->add_option("--k", params.k, "rounds parameter for theorem1/theorem2 (default 2)");
    double x_opt = 0;
    std::uint64_t y_opt = 0;
    auto* xflag = approx->add_option("--x", x_opt, "sample weight / ball threshold");
    auto* yflag = approx->add_option("--y", y_opt, "per-search dequeue budget");
    approx->add_option("--seed", params.seed, "PRNG seed (default 0)");
    approx->add_flag("--with-oracle", oracle.enabled, "also compute the exact girth and check bounds");
    approx->add_option("--oracle-cap", oracle.cap, "largest n the oracle will accept (default 5000)");
    approx->add_flag("--force-oracle", oracle.force, "run the oracle regardless of size");
    approx->add_option("--json", approx_json, "also write the report to this file");
    approx->add_flag("--no-timing", approx_no_timing, "report elapsed_ms as 0 for reproducible output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write canonical edge-list text");
    std::string gen_output, gen_model;
    girth::GeneratorSpec spec;
    girth::OracleOptions gen_oracle;
    gen->add_option("output", gen_output, "output file")->required();
    gen->add_option("--model", gen_model,
                    "cycle-with-pendant-trees | gnp | named | random-regular")
        ->required();
    gen->add_option("--name", spec.name, "named graph: triangle, k4, petersen, heawood, grid3x3, q4, cycle");
    gen->add_option("--n", spec.n, "vertex count (gnp, random-regular, named cycle)");
    gen->add_option("--p", spec.p, "edge probability (gnp)");
    double gen_avg_degree = 0;
    auto* avg_flag = gen->add_option("--avg-degree", gen_avg_degree, "gnp expected degree; overrides --p");
    gen->add_option("--g", spec.girth, "cycle length (cycle-with-pendant-trees)");
    gen->add_option("--depth", spec.depth, "pendant tree depth (cycle-with-pendant-trees)");
    gen->add_option("--degree", spec.degree, "degree (random-regular)");
    gen->add_option("--seed", spec.seed, "PRNG seed (default 0)");
    gen->add_flag("--with-oracle", gen_oracle.enabled, "print the exact girth of the output");
    gen->add_option("--oracle-cap", gen_oracle.cap, "largest n the oracle will accept (default 5000)");
    gen->add_flag("--force-oracle", gen_oracle.force, "run the oracle regardless of size");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a scaling experiment from a JSON spec");
    std::string sweep_spec_path, sweep_output_override;
    sweep->add_option("--spec", sweep_spec_path, "JSON sweep specification")->required();
    sweep->add_option("--output", sweep_output_override, "override the CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*exact) {
            emit_report(girth::cmd_exact(exact_input, {!exact_no_timing}), exact_json);
        } else if (*approx) {
            params.algo = algo;
            if (*xflag) params.x = x_opt;
            if (*yflag) params.y = y_opt;
            emit_report(girth::cmd_approx(approx_input, params, oracle, {!approx_no_timing}),
                        approx_json);
        } else if (*gen) {
            spec.model = girth::model_from_string(gen_model);
            if (*avg_flag) spec.avg_degree = gen_avg_degree;
            girth::GenOutcome out = girth::cmd_gen(spec, gen_output, gen_oracle);
            if (gen_oracle.enabled) {
                if (out.oracle_skipped)
                    std::cerr << "oracle skipped: n=" << out.n << " exceeds the cap of "
                              << gen_oracle.cap << "\n";
                else
                    std::cout << "oracle_girth "
                              << (out.oracle_girth ? std::to_string(*out.oracle_girth)
                                                   : std::string("acyclic"))
                              << "\n";
            }
        } else if (*sweep) {
            girth::SweepSpec s = girth::sweep_spec_from_json(read_file(sweep_spec_path));
            if (!sweep_output_override.empty()) s.output = sweep_output_override;
            auto summaries = girth::cmd_sweep(s);
            for (const auto& sum : summaries)
                std::cout << "slope " << sum.algo << " k=" << sum.k << " " << sum.slope << "\n";
        }
    } catch (const girth::GuaranteeViolation& e) {
        std::cerr << "guarantee violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
