#ifndef COPQ_EXPERIMENT_HPP
#define COPQ_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copq/ansatz.hpp"
#include "copq/instance.hpp"
#include "copq/instance_io.hpp"
#include "copq/metrics.hpp"
#include "copq/solvers.hpp"
#include "copq/spsa.hpp"
#include "copq/vqa.hpp"

namespace copq {

enum class Method { bnb, sa, vqe, qaoa };

Method parse_method(const std::string& name);
const char* method_name(Method m);

struct ExperimentConfig {
    bool tsp = true;
    int n = 3;
    Method method = Method::bnb;
    int trials = 30;
    std::uint64_t seed_base = 1;

    /// Instance source: a file when set, else a seeded random instance
    /// generated from (problem, n, seed_base).
    std::optional<std::string> instance_path;
    InstanceFormat instance_format = InstanceFormat::matrix;

    SaConfig sa;
    SpsaConfig spsa;
    /// Scale SPSA's step size to the objective's magnitude before each trial
    /// (first-update step of about 2*pi/10 per parameter).
    bool auto_step = true;
    AnsatzForm form = AnsatzForm::two_local;
    int reps = 1;
    int p = 3;
    long shots = 1024;
    bool warm = true; ///< seed sampled runs from a noiseless optimization

    double penalty = 0.0; ///< one-hot weight; 0 selects default_penalty
    std::optional<double> known_optimum; ///< skip the exact-solver oracle
    int workers = 0; ///< concurrent trials; 0 = hardware concurrency
};

struct ExperimentResult {
    ExperimentConfig config;
    ProblemInstance instance;
    Optimum optimum;
    std::vector<TrialRecord> records; ///< ordered by trial index
    MetricsSummary summary;
};

/// Resolves the instance an ExperimentConfig refers to.
ProblemInstance resolve_instance(const ExperimentConfig& cfg);

/// Runs cfg.trials independent trials (trial k seeded with seed_base + k),
/// scores them against the exact optimum, and summarizes. Unsatisfiable
/// (method, size) combinations raise a capability error before any trial.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-checks encoder, spectrum, ground state, and solvers against
/// exhaustive oracles on small seeded instances (n <= 4, both problems).
std::vector<VerificationCheck> run_verification();

} // namespace copq

#endif
