#include "girth/report.hpp"

#include <json.hpp>

#include "girth/error.hpp"

namespace girth {

namespace {
using nlohmann::json;
}

std::string report_to_json(const RunReport& r) {
    json algo;
    algo["name"] = r.algorithm;
    if (r.k) algo["k"] = *r.k;
    if (r.x) algo["x"] = *r.x;
    if (r.y) algo["y"] = *r.y;
    json j;
    j["format_version"] = r.format_version;
    j["algorithm"] = algo;
    j["input"] = r.input;
    if (r.girth_estimate)
        j["girth_estimate"] = *r.girth_estimate;
    else
        j["girth_estimate"] = "acyclic";
    j["cycle"] = r.cycle;
    if (r.oracle_girth) j["oracle_girth"] = *r.oracle_girth;
    if (r.guarantee_bound) j["guarantee_bound"] = *r.guarantee_bound;
    j["visited_total"] = r.visited_total;
    j["elapsed_ms"] = r.elapsed_ms;
    if (r.seed) j["seed"] = *r.seed;
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("bad report JSON: ") + e.what());
    }
    RunReport r;
    try {
        r.format_version = j.at("format_version").get<int>();
        const json& algo = j.at("algorithm");
        r.algorithm = algo.at("name").get<std::string>();
        if (algo.contains("k")) r.k = algo["k"].get<int>();
        if (algo.contains("x")) r.x = algo["x"].get<double>();
        if (algo.contains("y")) r.y = algo["y"].get<std::uint64_t>();
        r.input = j.at("input").get<std::string>();
        const json& est = j.at("girth_estimate");
        if (est.is_number_integer()) r.girth_estimate = est.get<int>();
        r.cycle = j.at("cycle").get<std::vector<int>>();
        if (j.contains("oracle_girth")) r.oracle_girth = j["oracle_girth"].get<int>();
        if (j.contains("guarantee_bound")) r.guarantee_bound = j["guarantee_bound"].get<long long>();
        r.visited_total = j.at("visited_total").get<std::uint64_t>();
        r.elapsed_ms = j.at("elapsed_ms").get<double>();
        if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw Error(std::string("bad report JSON: ") + e.what());
    }
    return r;
}

void check_report_invariants(const RunReport& r) {
    if (!r.oracle_girth || !r.girth_estimate) return;
    if (*r.girth_estimate < *r.oracle_girth)
        throw GuaranteeViolation("estimate " + std::to_string(*r.girth_estimate) +
                                 " below true girth " + std::to_string(*r.oracle_girth));
    if (r.guarantee_bound && *r.girth_estimate > *r.guarantee_bound)
        throw GuaranteeViolation("estimate " + std::to_string(*r.girth_estimate) +
                                 " exceeds guarantee bound " +
                                 std::to_string(*r.guarantee_bound));
}

}  // namespace girth
