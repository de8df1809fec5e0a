#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace girth {

inline constexpr int kReportFormatVersion = 1;

// Machine-readable record of one algorithm run. girth_estimate absent means
// the input (or the part the algorithm saw) is acyclic. When oracle_girth is
// present the estimate must sandwich: oracle_girth <= estimate, and for
// algorithms with a deterministic guarantee, estimate <= guarantee_bound.
struct RunReport {
    int format_version = kReportFormatVersion;
    std::string algorithm;
    std::optional<int> k;
    std::optional<double> x;
    std::optional<std::uint64_t> y;
    std::string input;
    std::optional<int> girth_estimate;
    std::vector<int> cycle;
    std::optional<int> oracle_girth;
    std::optional<long long> guarantee_bound;
    std::uint64_t visited_total = 0;
    double elapsed_ms = 0.0;
    std::optional<std::uint64_t> seed;

    bool operator==(const RunReport&) const = default;
};

// Canonical JSON: stable key order, so equal reports serialize to identical
// bytes and every serialized report parses back bit-exactly.
std::string report_to_json(const RunReport& report);
RunReport report_from_json(const std::string& text);

// Throws GuaranteeViolation if the oracle sandwich is broken.
void check_report_invariants(const RunReport& report);

}  // namespace girth
