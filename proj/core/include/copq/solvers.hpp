#ifndef COPQ_SOLVERS_HPP
#define COPQ_SOLVERS_HPP

#include <cstdint>
#include <vector>

#include "copq/instance.hpp"

namespace copq {

/// Simulated annealing schedule. The four canonical fields mirror the
/// [tolerance, markov_len, cooldown, t_start] quadruple used in reports.
struct SaConfig {
    double tolerance = 0.01; ///< absolute temperature floor: stop once T < tolerance
    int markov_len = 10;     ///< moves per temperature step
    double cooldown = 0.8;   ///< geometric cooling factor in (0, 1)
    double t_start = 10.0;   ///< initial temperature
    int max_chains = 100000; ///< safety cap on temperature steps

    void validate() const;
};

struct BnbOptions {
    int max_n = 12; ///< search-size guard (n! growth)
    bool audit = false; ///< verify bound <= incumbent at every expansion
};

struct SolverMeta {
    long long nodes_expanded = 0;  ///< interior nodes popped and branched
    long long nodes_explored = 0;  ///< complete permutations evaluated
    long long nodes_pruned = 0;    ///< nodes discarded by the bound test
    long long audit_violations = 0;
    long long temperature_steps = 0;
    long long moves_accepted = 0;
};

struct SolveResult {
    Permutation pi;
    double cost = 0.0;
    double elapsed_s = 0.0;
    SolverMeta meta;
};

/// Admissible lower bound on the cost of any permutation extending the given
/// prefix. TSP prefix: cities already placed at tour positions 0..k-1.
/// QAP prefix: locations already assigned to facilities 0..k-1.
/// Equals the exact cost when the prefix is a full permutation.
double lower_bound(const ProblemInstance& inst, const Permutation& partial);

/// Exact best-first branch and bound. Deterministic.
SolveResult bnb_solve(const ProblemInstance& inst, const BnbOptions& opts = {});

/// Metropolis simulated annealing with geometric cooling and a random
/// transposition neighborhood. Deterministic given the seed; returns the best
/// permutation ever visited.
SolveResult sa_solve(const ProblemInstance& inst, const SaConfig& cfg, std::uint64_t seed);

} // namespace copq

#endif
