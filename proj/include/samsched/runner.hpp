#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "samsched/policies.hpp"
#include "samsched/report.hpp"

namespace samsched {

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(const std::string& name);  // "csv" | "json"

struct RunConfig {
    std::string command;  // analyze | simulate | example1 | example2 | verify | sweep-alpha
    std::string instance_path;
    Policy policy = Policy::Sam;
    std::int64_t trials = 0;  // 0 skips the Monte Carlo cross-checks in examples
    std::uint64_t seed = 1;
    std::string out_path;  // empty -> stdout
    OutputFormat format = OutputFormat::Csv;
    double tol = 1e-9;
    std::string class_name;  // symmetric | shape-uniform | translated | exponential
    int count = 100;         // verify instances
    int n = 5;
    double M = 100.0;
    double eps = 1e-6;
    std::vector<double> alphas;
};

AnalysisReport analyze_run(const RunConfig& cfg);  // loads and analyzes the instance
Report simulate_report(const RunConfig& cfg);
Report example1_report(const RunConfig& cfg);
Report example2_report(const RunConfig& cfg);
Report verify_report(const RunConfig& cfg);

struct SweepRow {
    double alpha = 0;
    double rog = 0;
    double bound = 0;          // 1/(1+alpha)
    std::string kind;          // two-job | multi-job
};

struct SweepReport {
    std::vector<SweepRow> rows;
    int failures = 0;
    std::uint64_t seed = 0;
};

SweepReport sweep_alpha_run(const RunConfig& cfg);
std::string sweep_csv(const SweepReport& r);  // columns: alpha,rog,bound
nlohmann::json sweep_json(const SweepReport& r);

// dispatches on cfg.command and writes the report;
// returns 0, or 2 when a verification check failed
int run(const RunConfig& cfg);

}  // namespace samsched
