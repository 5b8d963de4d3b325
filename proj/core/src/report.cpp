#include "copq/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "copq/instance_io.hpp"

namespace copq {

using ordered_json = nlohmann::ordered_json;

const char* const kCsvHeader =
    "problem,n,method,par,sr99,sr95,feas,at_s,mt_s,n_feas,unc_mean,unc_max,unc_min,unc_std";

ReportFormat parse_report_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw std::invalid_argument("unknown report format '" + name +
                                "' (expected json or csv)");
}

namespace {

std::string num(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

} // namespace

std::string par_string(const ExperimentConfig& cfg) {
    switch (cfg.method) {
        case Method::bnb:
            return "-";
        case Method::sa:
            return "[" + num(cfg.sa.tolerance, "%g") + ", " +
                   std::to_string(cfg.sa.markov_len) + ", " + num(cfg.sa.cooldown, "%g") +
                   ", " + num(cfg.sa.t_start, "%g") + "]";
        case Method::vqe:
            return "[" + std::to_string(cfg.spsa.maxiter) + ", " +
                   ansatz_form_name(cfg.form) + "]";
        case Method::qaoa:
            return "[" + std::to_string(cfg.spsa.maxiter) + "]";
    }
    return "-";
}

std::string report_json(const ExperimentResult& result) {
    const ExperimentConfig& cfg = result.config;
    ordered_json doc;
    doc["schema_version"] = 1;

    ordered_json jc;
    jc["problem"] = cfg.tsp ? "tsp" : "qap";
    jc["n"] = cfg.n;
    jc["method"] = method_name(cfg.method);
    jc["par"] = par_string(cfg);
    jc["trials"] = cfg.trials;
    jc["seed"] = cfg.seed_base;
    if (cfg.method == Method::sa) {
        jc["sa"] = {{"tolerance", cfg.sa.tolerance},
                    {"markov_len", cfg.sa.markov_len},
                    {"cooldown", cfg.sa.cooldown},
                    {"t_start", cfg.sa.t_start}};
    }
    if (cfg.method == Method::vqe || cfg.method == Method::qaoa) {
        jc["spsa"] = {{"maxiter", cfg.spsa.maxiter},
                      {"a", cfg.spsa.a},
                      {"c", cfg.spsa.c},
                      {"alpha", cfg.spsa.alpha},
                      {"gamma", cfg.spsa.gamma},
                      {"auto_step", cfg.auto_step}};
        jc["shots"] = cfg.shots;
        jc["warm"] = cfg.warm;
        jc["penalty"] = cfg.penalty;
        if (cfg.method == Method::vqe) {
            jc["form"] = ansatz_form_name(cfg.form);
            jc["reps"] = cfg.reps;
        } else {
            jc["p"] = cfg.p;
        }
    }
    doc["config"] = std::move(jc);

    ordered_json ji;
    ji["name"] = instance_name(result.instance);
    ji["kind"] = is_tsp(result.instance) ? "tsp" : "qap";
    ji["n"] = instance_size(result.instance);
    ji["matrix_text"] = write_instance_text(result.instance);
    doc["instance"] = std::move(ji);

    ordered_json jo;
    jo["pi"] = result.optimum.pi;
    jo["cost"] = result.optimum.cost;
    doc["optimum"] = std::move(jo);

    const MetricsSummary& s = result.summary;
    ordered_json js;
    js["sr99"] = s.rates.sr99;
    js["sr95"] = s.rates.sr95;
    js["feasibility"] = s.feasibility;
    js["exact_match_semantics"] = s.rates.exact_match_semantics;
    ordered_json ju;
    ju["n_feasible"] = s.uncertainty.n_feasible;
    ju["mean"] = s.uncertainty.mean ? ordered_json(*s.uncertainty.mean) : ordered_json();
    ju["max"] = s.uncertainty.max ? ordered_json(*s.uncertainty.max) : ordered_json();
    ju["min"] = s.uncertainty.min ? ordered_json(*s.uncertainty.min) : ordered_json();
    ju["std"] =
        s.uncertainty.std_dev ? ordered_json(*s.uncertainty.std_dev) : ordered_json();
    js["uncertainty"] = std::move(ju);
    doc["summary"] = std::move(js);

    doc["trials"] = ordered_json::array();
    for (std::size_t k = 0; k < result.records.size(); ++k) {
        const TrialRecord& r = result.records[k];
        ordered_json jt;
        jt["trial"] = k;
        jt["seed"] = r.seed;
        jt["method"] = r.method;
        jt["feasible"] = r.feasible;
        jt["best_bits"] = r.best_bits ? ordered_json(*r.best_bits) : ordered_json();
        jt["pi"] = r.pi ? ordered_json(*r.pi) : ordered_json();
        jt["cost"] = r.cost ? ordered_json(*r.cost) : ordered_json();
        jt["probability"] = r.probability;
        jt["params"] = r.theta;
        doc["trials"].push_back(std::move(jt));
    }

    // Wall-clock data lives in its own section so that determinism checks can
    // drop it wholesale.
    ordered_json timing;
    timing["at_s"] = s.at_s;
    timing["mt_s"] = s.mt_s;
    ordered_json elapsed = ordered_json::array();
    for (const TrialRecord& r : result.records) elapsed.push_back(r.elapsed_s);
    timing["trial_elapsed_s"] = std::move(elapsed);
    doc["timing"] = std::move(timing);

    return doc.dump(2) + "\n";
}

std::string report_csv(const ExperimentResult& result) {
    const MetricsSummary& s = result.summary;
    std::string row = std::string(result.config.tsp ? "tsp" : "qap") + "," +
                      std::to_string(result.config.n) + "," +
                      method_name(result.config.method) + ",\"" +
                      par_string(result.config) + "\"," + num(s.rates.sr99, "%.2f") + "," +
                      num(s.rates.sr95, "%.2f") + "," + num(s.feasibility, "%.2f") + "," +
                      num(s.at_s, "%.6f") + "," + num(s.mt_s, "%.6f") + "," +
                      std::to_string(s.uncertainty.n_feasible);
    auto cell = [](const std::optional<double>& v) {
        return v ? num(*v, "%.2f") : std::string("-");
    };
    row += "," + cell(s.uncertainty.mean) + "," + cell(s.uncertainty.max) + "," +
           cell(s.uncertainty.min) + "," + cell(s.uncertainty.std_dev);
    return std::string(kCsvHeader) + "\n" + row + "\n";
}

void emit_report(const ExperimentResult& result, ReportFormat format,
                 const std::string& path) {
    if (result.records.empty()) {
        throw std::invalid_argument("refusing to write a report with no trial records");
    }
    const std::string text =
        format == ReportFormat::json ? report_json(result) : report_csv(result);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report path '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("failed writing report to '" + path + "'");
}

MetricsSummary summary_from_json(const std::string& json_text) {
    const auto doc = nlohmann::json::parse(json_text);
    const auto& js = doc.at("summary");
    MetricsSummary s;
    s.rates.sr99 = js.at("sr99").get<double>();
    s.rates.sr95 = js.at("sr95").get<double>();
    s.rates.exact_match_semantics = js.at("exact_match_semantics").get<bool>();
    s.feasibility = js.at("feasibility").get<double>();
    const auto& ju = js.at("uncertainty");
    s.uncertainty.n_feasible = ju.at("n_feasible").get<int>();
    if (!ju.at("mean").is_null()) s.uncertainty.mean = ju.at("mean").get<double>();
    if (!ju.at("max").is_null()) s.uncertainty.max = ju.at("max").get<double>();
    if (!ju.at("min").is_null()) s.uncertainty.min = ju.at("min").get<double>();
    if (!ju.at("std").is_null()) s.uncertainty.std_dev = ju.at("std").get<double>();
    const auto& jt = doc.at("timing");
    s.at_s = jt.at("at_s").get<double>();
    s.mt_s = jt.at("mt_s").get<double>();
    return s;
}

} // namespace copq
