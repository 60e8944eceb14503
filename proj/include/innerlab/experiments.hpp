#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "innerlab/serialize.hpp"

namespace innerlab {

// One checked quantity: the computed value, what it should be, how close it
// must come, and where the expectation comes from.
struct ReportEntry {
    std::string name;
    double value = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    std::string provenance;  // "closed-form" or "computed"
    bool pass = false;
};

struct ReportSeries {
    std::string name;
    std::vector<double> xs, ys;
};

struct ExperimentReport {
    std::string name;
    std::uint64_t seed = 0;
    std::map<std::string, double> parameters;
    std::vector<ReportEntry> entries;
    std::vector<ReportSeries> series;

    bool all_pass() const;
    const ReportSeries& find_series(const std::string& kind) const;

    Json to_json() const;
    static ExperimentReport from_json(const Json& j);
};

// Known experiment names: motivating, continuity, island, jensen,
// thickness-suite, clark-suite, entropy-growth.
ExperimentReport run_experiment(const std::string& name,
                                const std::map<std::string, double>& params, std::uint64_t seed);

// Standalone SVG of one series with axes and the entry tolerance band;
// byte-deterministic for a fixed report.
std::string emit_plot(const ExperimentReport& report, const std::string& kind);

}  // namespace innerlab
