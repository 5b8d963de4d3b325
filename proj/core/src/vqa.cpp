#include "copq/vqa.hpp"

#include <chrono>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "copq/rng.hpp"
#include "copq/transpile.hpp"

namespace copq {

TrialRecord feasible_output(const ShotDistribution& dist, const ProblemInstance& inst) {
    TrialRecord record;
    record.distribution = dist;

    long best_count = 0;
    // counts is an ordered map, so the first strict maximum encountered is the
    // lexicographically smallest bitstring among tied counts.
    for (const auto& [bits, count] : dist.counts) {
        if (count <= best_count) continue;
        const DecodedSolution sol = decode(bits, inst);
        if (!sol.feasible) continue;
        best_count = count;
        record.feasible = true;
        record.best_bits = bits;
        record.pi = sol.pi;
        record.cost = sol.cost;
    }
    if (record.feasible && dist.shots > 0) {
        record.probability =
            static_cast<double>(best_count) / static_cast<double>(dist.shots);
    }
    return record;
}

std::vector<double> cold_start(int dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("parameter dimension must be at least 1");
    Rng rng(derive_seed(seed, 0xc01d));
    std::vector<double> theta(dim);
    for (auto& t : theta) t = (2.0 * rng.next_unit() - 1.0) * std::numbers::pi;
    return theta;
}

namespace {

// Shared driver behind vqe_run and qaoa_run: the two differ only in ansatz.
TrialRecord run_variational(const IsingHamiltonian& h, const AnsatzSpec& spec,
                            const SpsaConfig& cfg, long shots,
                            const std::optional<std::vector<double>>& initial_point,
                            std::uint64_t seed, const ProblemInstance& inst,
                            const std::string& method) {
    cfg.validate();
    if (shots < 1) throw std::invalid_argument("shots must be at least 1");
    if (h.num_qubits != spec.width) {
        throw std::invalid_argument("Hamiltonian width does not match ansatz width");
    }

    const auto start = std::chrono::steady_clock::now();
    const Circuit circ = transpile_to_basis(build_ansatz(spec, &h));

    std::vector<double> theta0;
    if (initial_point) {
        if (static_cast<int>(initial_point->size()) != ansatz_param_count(spec)) {
            throw std::invalid_argument("initial point dimension does not match ansatz");
        }
        theta0 = *initial_point;
    } else {
        theta0 = cold_start(ansatz_param_count(spec), seed);
    }

    // Every estimate uses a fresh derived stream so the whole run is a pure
    // function of (inputs, seed).
    std::uint64_t eval = 0;
    const Objective objective = [&](const std::vector<double>& theta) {
        return estimate_expectation(circ, theta, h, shots, derive_seed(seed, 0xe5 + eval++));
    };

    const SpsaResult opt = spsa_minimize(objective, theta0, cfg, derive_seed(seed, 0x09));

    const Statevector state = run(circ, opt.theta);
    const ShotDistribution dist = sample(state, shots, derive_seed(seed, 0xf1a1));

    TrialRecord record = feasible_output(dist, inst);
    record.seed = seed;
    record.method = method;
    record.theta = opt.theta;
    record.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

} // namespace

std::vector<double> warm_start(const IsingHamiltonian& h, const AnsatzSpec& spec,
                               const SpsaConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const Circuit circ = transpile_to_basis(build_ansatz(spec, &h));
    const std::vector<double> theta0 = cold_start(ansatz_param_count(spec), seed);

    // The noiseless objective; a precomputed diagonal makes the SPSA loop
    // cheap at the widths where it is affordable.
    Objective objective;
    if (h.num_qubits <= 20) {
        auto diag = std::make_shared<std::vector<double>>(energy_diagonal(h));
        objective = [&circ, diag](const std::vector<double>& theta) {
            return exact_expectation(run(circ, theta), *diag);
        };
    } else {
        objective = [&circ, &h](const std::vector<double>& theta) {
            return exact_expectation(run(circ, theta), h);
        };
    }
    return spsa_minimize(objective, theta0, cfg, derive_seed(seed, 0x3a)).theta;
}

TrialRecord vqe_run(const IsingHamiltonian& h, const AnsatzSpec& spec, const SpsaConfig& cfg,
                    long shots, const std::optional<std::vector<double>>& initial_point,
                    std::uint64_t seed, const ProblemInstance& inst) {
    if (spec.form != AnsatzForm::two_local && spec.form != AnsatzForm::real_amplitudes) {
        throw std::invalid_argument("vqe_run expects a TL or RA ansatz form");
    }
    return run_variational(h, spec, cfg, shots, initial_point, seed, inst, "vqe");
}

TrialRecord qaoa_run(const IsingHamiltonian& h, int p, const SpsaConfig& cfg, long shots,
                     const std::optional<std::vector<double>>& initial_point,
                     std::uint64_t seed, const ProblemInstance& inst) {
    if (p < 1) throw std::invalid_argument("QAOA depth p must be at least 1");
    AnsatzSpec spec{AnsatzForm::qaoa, p, h.num_qubits};
    return run_variational(h, spec, cfg, shots, initial_point, seed, inst, "qaoa");
}

} // namespace copq
