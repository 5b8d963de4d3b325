#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "copq/errors.hpp"
#include "copq/experiment.hpp"
#include "copq/instance_io.hpp"
#include "copq/ising.hpp"
#include "copq/qubo.hpp"
#include "copq/report.hpp"

namespace {

struct CliOptions {
    std::string problem = "tsp";
    int n = 3;
    std::uint64_t seed = 1;
    std::string method = "bnb";
    int trials = 30;
    long shots = 1024;
    std::string form = "TL";
    int reps = 1;
    int p = 3;
    int spsa_maxiter = 0; ///< 0 = per-method preset
    std::string sa;       ///< "tol,len,cool,t0"; empty = per-problem preset
    double penalty = 0.0;
    std::string format;
    std::string out;
    std::string in;
    std::string in_format = "matrix";
    bool problem_given = false;
    bool n_given = false;
};

copq::SaConfig parse_sa_string(const std::string& text) {
    copq::SaConfig cfg;
    std::istringstream stream(text);
    std::string token;
    double values[4];
    for (int i = 0; i < 4; ++i) {
        if (!std::getline(stream, token, ',')) {
            throw std::invalid_argument("--sa expects \"tolerance,markov_len,cooldown,t_start\"");
        }
        std::size_t used = 0;
        values[i] = std::stod(token, &used);
        while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
            ++used;
        }
        if (used != token.size()) {
            throw std::invalid_argument("--sa has a malformed number: '" + token + "'");
        }
    }
    if (std::getline(stream, token, ',')) {
        throw std::invalid_argument("--sa expects exactly four comma-separated values");
    }
    cfg.tolerance = values[0];
    cfg.markov_len = static_cast<int>(values[1]);
    cfg.cooldown = values[2];
    cfg.t_start = values[3];
    cfg.validate();
    return cfg;
}

copq::ExperimentConfig build_config(const CliOptions& opt) {
    copq::ExperimentConfig cfg;
    if (opt.problem != "tsp" && opt.problem != "qap") {
        throw std::invalid_argument("--problem must be tsp or qap");
    }
    cfg.tsp = opt.problem == "tsp";
    cfg.n = opt.n;
    cfg.seed_base = opt.seed;
    cfg.method = copq::parse_method(opt.method);
    cfg.trials = opt.trials;
    cfg.shots = opt.shots;
    cfg.form = copq::parse_ansatz_form(opt.form);
    if (cfg.form == copq::AnsatzForm::qaoa) {
        throw std::invalid_argument("--form selects the VQE ansatz; use --method qaoa");
    }
    cfg.reps = opt.reps;
    cfg.p = opt.p;
    cfg.penalty = opt.penalty;

    if (!opt.in.empty()) {
        cfg.instance_path = opt.in;
        cfg.instance_format = copq::parse_format_name(opt.in_format);
        // The file defines the problem kind and size unless flags pin them explicitly;
        // explicit flags are kept and cross-checked against the file downstream.
        const copq::ProblemInstance probe = copq::parse_instance(opt.in, cfg.instance_format);
        if (!opt.problem_given) cfg.tsp = copq::is_tsp(probe);
        if (!opt.n_given) cfg.n = copq::instance_size(probe);
    }

    // Method presets mirror the benchmark tables; explicit flags override.
    if (!opt.sa.empty()) {
        cfg.sa = parse_sa_string(opt.sa);
    } else if (!cfg.tsp) {
        cfg.sa = {1.0, 20, 0.90, 20.0};
    } else {
        cfg.sa = {0.01, 10, 0.8, 10.0};
    }
    if (opt.spsa_maxiter > 0) {
        cfg.spsa.maxiter = opt.spsa_maxiter;
    } else if (cfg.method == copq::Method::qaoa) {
        cfg.spsa.maxiter = 50;
    } else {
        cfg.spsa.maxiter = cfg.tsp ? 100 : 1000;
    }
    return cfg;
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output path '" + out_path + "'");
    out << text;
}

int cmd_gen(const CliOptions& opt) {
    const copq::ExperimentConfig cfg = build_config(opt);
    if (!opt.format.empty() && opt.format != "matrix") {
        throw std::invalid_argument("gen writes the matrix format only");
    }
    write_text(copq::write_instance_text(copq::resolve_instance(cfg)), opt.out);
    return 0;
}

int cmd_encode(const CliOptions& opt) {
    const copq::ExperimentConfig cfg = build_config(opt);
    const copq::ProblemInstance inst = copq::resolve_instance(cfg);
    const double weight = cfg.penalty > 0.0 ? cfg.penalty : copq::default_penalty(inst);
    const copq::IsingHamiltonian h = copq::qubo_to_ising(copq::encode(inst, weight));
    write_text(copq::hamiltonian_to_json(h) + "\n", opt.out);
    return 0;
}

int cmd_solve(const CliOptions& opt) {
    copq::ExperimentConfig cfg = build_config(opt);
    cfg.trials = 1;
    const copq::ExperimentResult result = copq::run_experiment(cfg);
    const copq::TrialRecord& r = result.records.front();

    std::ostringstream text;
    text << "method: " << copq::method_name(cfg.method) << "\n"
         << "problem: " << (cfg.tsp ? "tsp" : "qap") << " n=" << cfg.n << "\n"
         << "feasible: " << (r.feasible ? "true" : "false") << "\n";
    if (r.feasible) {
        text << "pi:";
        for (int v : *r.pi) text << ' ' << v;
        text << "\ncost: " << *r.cost << "\n"
             << "optimum: " << result.optimum.cost << "\n"
             << "probability: " << r.probability << "\n";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", r.elapsed_s);
    text << "elapsed_s: " << buf << "\n";
    std::cout << text.str();
    if (!opt.out.empty()) {
        copq::emit_report(result, copq::ReportFormat::json, opt.out);
    }
    return 0;
}

int cmd_bench(const CliOptions& opt) {
    const copq::ExperimentConfig cfg = build_config(opt);
    const copq::ReportFormat format =
        copq::parse_report_format(opt.format.empty() ? "csv" : opt.format);
    const copq::ExperimentResult result = copq::run_experiment(cfg);
    if (opt.out.empty()) {
        std::cout << (format == copq::ReportFormat::json ? copq::report_json(result)
                                                         : copq::report_csv(result));
    } else {
        copq::emit_report(result, format, opt.out);
    }
    return 0;
}

int cmd_verify() {
    const auto checks = copq::run_verification();
    int failed = 0;
    for (const auto& check : checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "\n";
        if (!check.passed) ++failed;
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Combinatorial-optimization benchmark harness: exact, annealing, and "
                 "simulated variational solvers over spin encodings of TSP/QAP"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_common = [&opt](CLI::App* cmd, bool with_method) {
        cmd->add_option("--problem", opt.problem,
                        "Problem kind: tsp or qap (taken from --in when not set)")
            ->capture_default_str();
        cmd->add_option("--n", opt.n, "Instance size (taken from --in when not set)")
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed, "Base seed")->capture_default_str();
        if (with_method) {
            cmd->add_option("--method", opt.method, "bnb, sa, vqe, or qaoa")
                ->capture_default_str();
            cmd->add_option("--shots", opt.shots, "Samples per circuit execution")
                ->capture_default_str();
            cmd->add_option("--form", opt.form, "VQE ansatz form: TL or RA")
                ->capture_default_str();
            cmd->add_option("--reps", opt.reps, "VQE entangling repetitions")
                ->capture_default_str();
            cmd->add_option("--p", opt.p, "QAOA depth")->capture_default_str();
            cmd->add_option("--spsa-maxiter", opt.spsa_maxiter,
                            "SPSA iterations (0 = per-method preset)");
            cmd->add_option("--sa", opt.sa,
                            "SA config \"tolerance,markov_len,cooldown,t_start\"");
        }
        cmd->add_option("--penalty", opt.penalty,
                        "One-hot constraint weight (0 = instance-scaled default)");
        cmd->add_option("--in", opt.in, "Read the instance from a file");
        cmd->add_option("--in-format", opt.in_format,
                        "Instance file format: matrix, tsplib, or qaplib")
            ->capture_default_str();
        cmd->add_option("--out", opt.out, "Output path (default: stdout)");
    };

    CLI::App* gen = app.add_subcommand("gen", "Write a seeded random instance");
    add_common(gen, false);
    gen->add_option("--format", opt.format, "Instance output format (matrix)");

    CLI::App* encode = app.add_subcommand("encode", "Encode an instance as a spin Hamiltonian");
    add_common(encode, false);

    CLI::App* solve = app.add_subcommand("solve", "Run one solver trial");
    add_common(solve, true);

    CLI::App* bench = app.add_subcommand("bench", "Run a multi-trial experiment and report");
    add_common(bench, true);
    bench->add_option("--trials", opt.trials, "Trial count")->capture_default_str();
    bench->add_option("--format", opt.format, "Report format: csv or json (default csv)");

    CLI::App* verify =
        app.add_subcommand("verify", "Cross-check encoder and solvers against oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 1;
    }

    for (CLI::App* sub : {gen, encode, solve, bench}) {
        if (sub->parsed()) {
            opt.problem_given = sub->count("--problem") > 0;
            opt.n_given = sub->count("--n") > 0;
        }
    }

    try {
        if (gen->parsed()) return cmd_gen(opt);
        if (encode->parsed()) return cmd_encode(opt);
        if (solve->parsed()) return cmd_solve(opt);
        if (bench->parsed()) return cmd_bench(opt);
        if (verify->parsed()) return cmd_verify();
    } catch (const copq::CapabilityError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const copq::SizeLimitError& e) {
        std::cerr << "capability error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
