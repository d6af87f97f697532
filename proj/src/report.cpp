#include "samsched/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace samsched {

namespace {

using nlohmann::json;

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json maybe(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json distribution_to_json(const Distribution& d) {
    if (const auto* det = std::get_if<Deterministic>(&d)) {
        return {{"type", "deterministic"}, {"value", det->value}};
    }
    if (const auto* fd = std::get_if<FiniteDiscrete>(&d)) {
        json atoms = json::array();
        for (const Atom& a : fd->atoms) atoms.push_back({a.value, a.prob});
        return {{"type", "finite"}, {"atoms", atoms}};
    }
    if (const auto* e = std::get_if<Exponential>(&d)) {
        return {{"type", "exponential"}, {"rate", e->rate}};
    }
    if (const auto* u = std::get_if<UniformInterval>(&d)) {
        return {{"type", "uniform"}, {"lo", u->lo}, {"hi", u->hi}};
    }
    if (const auto* s = std::get_if<ShapeUniform>(&d)) {
        return {{"type", "shape_uniform"}, {"base", s->base->name}, {"rate", s->rate}};
    }
    const auto& t = std::get<Translated>(d);
    return {{"type", "translated"}, {"base", t.base->name}, {"shift", t.shift}};
}

Distribution distribution_from_json(const json& j) {
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "deterministic") return Deterministic(j.at("value").get<double>());
        if (type == "finite") {
            std::vector<Atom> atoms;
            for (const auto& a : j.at("atoms")) {
                atoms.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
            }
            return FiniteDiscrete(std::move(atoms));
        }
        if (type == "exponential") return Exponential(j.at("rate").get<double>());
        if (type == "uniform") {
            return UniformInterval(j.at("lo").get<double>(), j.at("hi").get<double>());
        }
        if (type == "shape_uniform") {
            return ShapeUniform(find_base_density(j.at("base").get<std::string>()),
                                j.at("rate").get<double>());
        }
        if (type == "translated") {
            return Translated(find_base_density(j.at("base").get<std::string>()),
                              j.at("shift").get<double>());
        }
        throw ParseError("unknown distribution type '" + type + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("distribution: ") + e.what());
    } catch (const ValidationError& e) {
        throw ParseError(std::string("distribution: ") + e.what());
    }
}

json instance_to_json(const Instance& inst) {
    json jobs = json::array();
    for (const Job& job : inst.jobs) {
        jobs.push_back({{"weight", job.weight}, {"dist", distribution_to_json(job.dist)}});
    }
    return {{"jobs", jobs}};
}

Instance instance_from_json(const json& j) {
    try {
        std::vector<Job> jobs;
        for (const auto& job : j.at("jobs")) {
            jobs.emplace_back(job.at("weight").get<double>(),
                              distribution_from_json(job.at("dist")));
        }
        return Instance(std::move(jobs));
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance: ") + e.what());
    } catch (const ValidationError& e) {
        throw ParseError(std::string("instance: ") + e.what());
    }
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open instance file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("instance file '" + path + "': " + e.what());
    }
    return instance_from_json(j);
}

json permutation_to_json(const Permutation& perm) {
    json out = json::array();
    for (const int j : perm.order) out.push_back(j + 1);
    return out;
}

std::string analysis_csv(const AnalysisReport& r) {
    std::ostringstream out;
    out << "n,L,H,cost,rog,kappa,alpha,bound_alpha,policy\n";
    out << r.n << ',' << format_double(r.l) << ',' << format_double(r.h) << ','
        << format_double(r.cost) << ',' << format_double(r.rog) << ',' << format_double(r.kappa)
        << ',' << format_double(r.alpha) << ','
        << (r.bound_alpha ? format_double(*r.bound_alpha) : "") << ',' << policy_name(r.policy)
        << '\n';
    return out.str();
}

json analysis_json(const AnalysisReport& r) {
    json j;
    j["n"] = r.n;
    j["policy"] = policy_name(r.policy);
    j["L"] = r.l;
    j["H"] = r.h;
    j["cost"] = r.cost;
    j["rog"] = r.rog;
    j["kappa"] = r.kappa;
    j["alpha"] = std::isfinite(r.alpha) ? json(r.alpha) : json("inf");
    j["bound_half_ok"] = r.bound_half_ok;
    j["bound_alpha"] = maybe(r.bound_alpha);
    j["near_degenerate"] = r.near_degenerate;
    j["method"] = r.method;
    return j;
}

std::string report_csv(const Report& r) {
    std::ostringstream out;
    out << "quantity,policy,method,value,std_err,target,note\n";
    for (const ReportRow& row : r.rows) {
        out << csv_escape(row.quantity) << ',' << row.policy << ',' << row.method << ','
            << format_double(row.value) << ',' << (row.std_err ? format_double(*row.std_err) : "")
            << ',' << (row.target ? format_double(*row.target) : "") << ','
            << csv_escape(row.note) << '\n';
    }
    return out.str();
}

json report_json(const Report& r) {
    json meta = json::object();
    for (const auto& [key, value] : r.meta) meta[key] = value;
    json rows = json::array();
    for (const ReportRow& row : r.rows) {
        json jr;
        jr["quantity"] = row.quantity;
        jr["policy"] = row.policy;
        jr["method"] = row.method;
        jr["value"] = row.value;
        jr["std_err"] = maybe(row.std_err);
        jr["target"] = maybe(row.target);
        jr["note"] = row.note;
        rows.push_back(jr);
    }
    return {{"command", r.command}, {"meta", meta}, {"rows", rows}, {"failures", r.failures}};
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write to '" + out_path + "'");
    out << text;
}

}  // namespace samsched
