#include "psl/report_io.hpp"

#include "json.hpp"

#include <cstdio>

namespace psl {

std::string report_to_json(const run_report& report, int indent) {
    nlohmann::ordered_json j;
    j["schema_version"] = report_schema_version;
    j["n"] = report.n;
    j["seed"] = report.seed;
    j["instance"] = report.instance;
    j["instance_seed"] = report.instance_seed;
    j["budget_seconds"] = report.budget_seconds;
    j["best_psl"] = report.best_psl;
    // may exceed 64 bits, serialized as a decimal string
    j["best_fitness"] = fitness_to_string(report.best_fitness);
    j["final_fitness"] = fitness_to_string(report.final_fitness);
    j["best_sequence"] = report.best_sequence;
    j["iterations"] = report.iterations;
    j["flips"] = report.flips;
    j["kicks"] = report.kicks;
    j["elapsed_seconds"] = report.elapsed_seconds;
    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    for (const trace_point& point : report.improvement_trace)
        trace.push_back({{"elapsed_seconds", point.elapsed_seconds}, {"psl", point.psl}});
    j["improvement_trace"] = std::move(trace);
    return j.dump(indent);
}

run_report report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    run_report report;
    report.n = j.at("n").get<std::size_t>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.instance = j.at("instance").get<unsigned>();
    report.instance_seed = j.at("instance_seed").get<std::uint64_t>();
    report.budget_seconds = j.at("budget_seconds").get<double>();
    report.best_psl = j.at("best_psl").get<std::int32_t>();
    report.best_fitness = fitness_from_string(j.at("best_fitness").get<std::string>());
    report.final_fitness = fitness_from_string(j.at("final_fitness").get<std::string>());
    report.best_sequence = j.at("best_sequence").get<std::string>();
    report.iterations = j.at("iterations").get<std::uint64_t>();
    report.flips = j.at("flips").get<std::uint64_t>();
    report.kicks = j.at("kicks").get<std::uint64_t>();
    report.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    for (const auto& point : j.at("improvement_trace"))
        report.improvement_trace.push_back({point.at("elapsed_seconds").get<double>(),
                                            point.at("psl").get<std::int32_t>()});
    return report;
}

std::string trace_to_csv(const std::vector<trace_point>& trace) {
    std::string out = "elapsed_seconds,psl\n";
    char row[64];
    for (const trace_point& point : trace) {
        std::snprintf(row, sizeof row, "%.6f,%d\n", point.elapsed_seconds, point.psl);
        out += row;
    }
    return out;
}

}  // namespace psl
