#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "samsched/instance.hpp"
#include "samsched/pairwise.hpp"

namespace samsched {

nlohmann::json distribution_to_json(const Distribution& d);
Distribution distribution_from_json(const nlohmann::json& j);

// {"jobs": [{"weight": w, "dist": {...}}, ...]}; job ids are the 1-based
// positions in the array
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);
Instance load_instance_file(const std::string& path);

nlohmann::json permutation_to_json(const Permutation& perm);  // 1-based ids

// columns: n,L,H,cost,rog,kappa,alpha,bound_alpha,policy
std::string analysis_csv(const AnalysisReport& r);
nlohmann::json analysis_json(const AnalysisReport& r);

struct ReportRow {
    std::string quantity;
    std::string policy;
    std::string method;  // exact-pairwise | exact-enumeration | monte-carlo
    double value = 0;
    std::optional<double> std_err;
    std::optional<double> target;  // asymptotic/reference value when one exists
    std::string note;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<ReportRow> rows;
    int failures = 0;
};

std::string report_csv(const Report& r);
nlohmann::json report_json(const Report& r);

std::string format_double(double v);  // shortest lossless-ish, "inf" for infinities
void write_text(const std::string& text, const std::string& out_path);  // "" -> stdout

}  // namespace samsched
