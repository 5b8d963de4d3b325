#ifndef COPQ_VQA_HPP
#define COPQ_VQA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copq/ansatz.hpp"
#include "copq/instance.hpp"
#include "copq/ising.hpp"
#include "copq/spsa.hpp"
#include "copq/statevector.hpp"

namespace copq {

/// Outcome of one variational run: the most frequent feasible eigenstate of
/// the final shot distribution, if any.
struct TrialRecord {
    bool feasible = false;
    std::optional<std::string> best_bits;
    std::optional<Permutation> pi;
    std::optional<double> cost;
    double probability = 0.0; ///< counts[best_bits] / shots when feasible
    ShotDistribution distribution;
    double elapsed_s = 0.0;
    std::uint64_t seed = 0;
    std::string method;
    std::vector<double> theta; ///< optimized circuit parameters
};

/// Picks the highest-count feasible bitstring (ties: lexicographically
/// smallest) and fills in its decoded permutation, cost, and frequency.
/// Infeasibility is reported as a value, not an error.
TrialRecord feasible_output(const ShotDistribution& dist, const ProblemInstance& inst);

/// Seeded uniform draw from [-pi, pi]^dim: the cold-start parameter vector.
std::vector<double> cold_start(int dim, std::uint64_t seed);

/// Optimizes against the exact (noiseless) expectation and returns the
/// resulting parameters, to be used as the initial point of sampled runs.
std::vector<double> warm_start(const IsingHamiltonian& h, const AnsatzSpec& spec,
                               const SpsaConfig& cfg, std::uint64_t seed);

/// Hybrid loop: SPSA over the shot-estimated expectation of the ansatz state,
/// then one final sampled distribution at the optimized parameters, filtered
/// through feasible_output.
TrialRecord vqe_run(const IsingHamiltonian& h, const AnsatzSpec& spec, const SpsaConfig& cfg,
                    long shots, const std::optional<std::vector<double>>& initial_point,
                    std::uint64_t seed, const ProblemInstance& inst);

/// Same loop with the QAOA ansatz at depth p; parameters (gamma_1..gamma_p,
/// beta_1..beta_p).
TrialRecord qaoa_run(const IsingHamiltonian& h, int p, const SpsaConfig& cfg, long shots,
                     const std::optional<std::vector<double>>& initial_point,
                     std::uint64_t seed, const ProblemInstance& inst);

} // namespace copq

#endif
