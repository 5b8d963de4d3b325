#include "copq/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "copq/errors.hpp"
#include "copq/qubo.hpp"
#include "copq/rng.hpp"
#include "copq/statevector.hpp"
#include "copq/transpile.hpp"

namespace copq {

Method parse_method(const std::string& name) {
    if (name == "bnb") return Method::bnb;
    if (name == "sa") return Method::sa;
    if (name == "vqe") return Method::vqe;
    if (name == "qaoa") return Method::qaoa;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected bnb, sa, vqe, or qaoa)");
}

const char* method_name(Method m) {
    switch (m) {
        case Method::bnb: return "bnb";
        case Method::sa: return "sa";
        case Method::vqe: return "vqe";
        case Method::qaoa: return "qaoa";
    }
    return "?";
}

ProblemInstance resolve_instance(const ExperimentConfig& cfg) {
    if (cfg.instance_path) {
        ProblemInstance inst = parse_instance(*cfg.instance_path, cfg.instance_format);
        if (is_tsp(inst) != cfg.tsp) {
            throw std::invalid_argument("instance file problem kind does not match --problem");
        }
        return inst;
    }
    return random_instance(cfg.tsp, cfg.n, cfg.seed_base);
}

namespace {

TrialRecord classical_record(const SolveResult& res, bool tsp, std::uint64_t seed,
                             const std::string& method) {
    TrialRecord record;
    record.feasible = true;
    record.pi = res.pi;
    record.cost = res.cost;
    record.best_bits = permutation_to_bits(res.pi, tsp);
    record.probability = 1.0;
    record.elapsed_s = res.elapsed_s;
    record.seed = seed;
    record.method = method;
    return record;
}

struct VariationalPlan {
    IsingHamiltonian h;
    AnsatzSpec spec;
    Circuit circuit; ///< transpiled, for step-size calibration
    std::vector<double> diagonal;
};

VariationalPlan make_plan(const ExperimentConfig& cfg, const ProblemInstance& inst) {
    VariationalPlan plan;
    const double weight = cfg.penalty > 0.0 ? cfg.penalty : default_penalty(inst);
    plan.h = qubo_to_ising(encode(inst, weight));
    if (cfg.method == Method::qaoa) {
        plan.spec = {AnsatzForm::qaoa, cfg.p, plan.h.num_qubits};
    } else {
        plan.spec = {cfg.form, cfg.reps, plan.h.num_qubits};
    }
    plan.circuit = transpile_to_basis(build_ansatz(plan.spec, &plan.h));
    if (plan.h.num_qubits <= 20) plan.diagonal = energy_diagonal(plan.h);
    return plan;
}

TrialRecord variational_trial(const ExperimentConfig& cfg, const ProblemInstance& inst,
                              const VariationalPlan& plan, std::uint64_t seed) {
    SpsaConfig spsa = cfg.spsa;
    const std::vector<double> theta0 = cold_start(ansatz_param_count(plan.spec), seed);

    if (cfg.auto_step) {
        // Calibrate against the noiseless objective at this trial's start
        // point; with raw Hamiltonian coefficients in the tens, the textbook
        // a = 0.2 would overshoot by orders of magnitude.
        Objective exact_obj;
        if (!plan.diagonal.empty()) {
            exact_obj = [&plan](const std::vector<double>& theta) {
                return exact_expectation(run(plan.circuit, theta), plan.diagonal);
            };
        } else {
            exact_obj = [&plan](const std::vector<double>& theta) {
                return exact_expectation(run(plan.circuit, theta), plan.h);
            };
        }
        spsa.a = calibrate_step_size(exact_obj, theta0, spsa.c, seed);
    }

    std::optional<std::vector<double>> initial_point;
    if (cfg.warm) initial_point = warm_start(plan.h, plan.spec, spsa, seed);

    if (cfg.method == Method::qaoa) {
        return qaoa_run(plan.h, cfg.p, spsa, cfg.shots, initial_point, seed, inst);
    }
    return vqe_run(plan.h, plan.spec, spsa, cfg.shots, initial_point, seed, inst);
}

void check_capabilities(const ExperimentConfig& cfg) {
    if (cfg.method == Method::vqe || cfg.method == Method::qaoa) {
        const int width = cfg.n * cfg.n;
        if (width > max_qubits()) {
            throw CapabilityError("method " + std::string(method_name(cfg.method)) +
                                  " at n = " + std::to_string(cfg.n) + " needs " +
                                  std::to_string(width) +
                                  " qubits, above the simulator cap of " +
                                  std::to_string(max_qubits()) +
                                  " (override with COPQ_MAX_QUBITS)");
        }
    }
    BnbOptions bnb_opts;
    if (cfg.method == Method::bnb && cfg.n > bnb_opts.max_n) {
        throw CapabilityError("branch and bound supports n <= " +
                              std::to_string(bnb_opts.max_n));
    }
    if (!cfg.known_optimum && cfg.n > bnb_opts.max_n) {
        throw CapabilityError("no exact oracle available for n = " + std::to_string(cfg.n) +
                              "; supply the optimum externally");
    }
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (cfg.n < 2) throw std::invalid_argument("instance size must be at least 2");
    if (cfg.method == Method::sa) cfg.sa.validate();
    if (cfg.method == Method::vqe || cfg.method == Method::qaoa) cfg.spsa.validate();
    check_capabilities(cfg);

    ExperimentResult result;
    result.config = cfg;
    result.instance = resolve_instance(cfg);
    if (instance_size(result.instance) != cfg.n) {
        throw std::invalid_argument("instance size does not match --n");
    }

    if (cfg.known_optimum) {
        result.optimum.cost = *cfg.known_optimum;
    } else {
        const SolveResult oracle = bnb_solve(result.instance);
        result.optimum.pi = oracle.pi;
        result.optimum.cost = oracle.cost;
    }

    std::optional<VariationalPlan> plan;
    if (cfg.method == Method::vqe || cfg.method == Method::qaoa) {
        plan.emplace(make_plan(cfg, result.instance));
    }

    result.records.resize(cfg.trials);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int k = next.fetch_add(1); k < cfg.trials; k = next.fetch_add(1)) {
            const std::uint64_t seed = cfg.seed_base + static_cast<std::uint64_t>(k);
            switch (cfg.method) {
                case Method::bnb:
                    result.records[k] =
                        classical_record(bnb_solve(result.instance), cfg.tsp, seed, "bnb");
                    break;
                case Method::sa:
                    result.records[k] = classical_record(
                        sa_solve(result.instance, cfg.sa, seed), cfg.tsp, seed, "sa");
                    break;
                case Method::vqe:
                case Method::qaoa:
                    result.records[k] = variational_trial(cfg, result.instance, *plan, seed);
                    break;
            }
        }
    };

    int workers = cfg.workers > 0 ? cfg.workers
                                  : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, cfg.trials);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    result.summary = summarize(result.records, result.optimum.cost);
    return result;
}

namespace {

void record_check(std::vector<VerificationCheck>& out, const std::string& name, bool passed,
                  const std::string& detail = "") {
    out.push_back({name, passed, detail});
}

} // namespace

std::vector<VerificationCheck> run_verification() {
    std::vector<VerificationCheck> checks;
    for (const bool tsp : {true, false}) {
        const char* kind = tsp ? "tsp" : "qap";
        for (int n = 2; n <= 4; ++n) {
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const std::string tag =
                    std::string(kind) + " n=" + std::to_string(n) + " seed=" +
                    std::to_string(seed);
                const ProblemInstance inst = random_instance(tsp, n, seed);
                const Optimum opt = brute_force_optimum(inst);
                const QuboModel qubo = encode(inst, default_penalty(inst));
                const IsingHamiltonian h = qubo_to_ising(qubo);

                bool spectrum_ok = true;
                const std::uint64_t dim = std::uint64_t{1} << h.num_qubits;
                for (std::uint64_t s = 0; s < dim; ++s) {
                    const std::string bits = index_to_bits(s, h.num_qubits);
                    const double e = energy(h, bits);
                    const double v = qubo_eval(qubo, bits);
                    const double scale = std::max({1.0, std::abs(e), std::abs(v)});
                    if (std::abs(e - v) > 1e-9 * scale) {
                        spectrum_ok = false;
                        break;
                    }
                }
                record_check(checks, tag + ": spin energies match the binary polynomial",
                             spectrum_ok);

                const GroundState gs = ground_state_bruteforce(h);
                const DecodedSolution sol = decode(gs.bits, inst);
                const bool ground_ok =
                    sol.feasible && sol.cost && std::abs(*sol.cost - opt.cost) <= 1e-9;
                record_check(checks, tag + ": ground state is the optimal assignment",
                             ground_ok);

                const SolveResult bnb = bnb_solve(inst);
                record_check(checks, tag + ": branch and bound matches brute force",
                             std::abs(bnb.cost - opt.cost) <= 1e-9);

                const std::string round_trip =
                    permutation_to_bits(opt.pi, tsp);
                const DecodedSolution back = decode(round_trip, inst);
                record_check(checks, tag + ": permutation round-trips through bits",
                             back.feasible && back.pi && *back.pi == opt.pi);
            }
        }
    }
    return checks;
}

} // namespace copq
