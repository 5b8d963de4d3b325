#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "copq/rng.hpp"
#include "copq/solvers.hpp"

namespace copq {

void SaConfig::validate() const {
    if (tolerance <= 0.0) throw std::invalid_argument("SA tolerance must be positive");
    if (markov_len < 1) throw std::invalid_argument("SA markov_len must be at least 1");
    if (cooldown <= 0.0 || cooldown >= 1.0) {
        throw std::invalid_argument("SA cooldown must lie in (0, 1)");
    }
    if (t_start <= 0.0) throw std::invalid_argument("SA t_start must be positive");
    if (max_chains < 1) throw std::invalid_argument("SA max_chains must be at least 1");
}

SolveResult sa_solve(const ProblemInstance& inst, const SaConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    const int n = instance_size(inst);
    if (n < 2) throw std::invalid_argument("instance size must be at least 2");

    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(seed, 0x5a));

    Permutation current(n);
    std::iota(current.begin(), current.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(current[i], current[rng.next_int(0, i)]);
    }
    double current_cost = instance_cost(inst, current);

    SolveResult result;
    result.pi = current;
    result.cost = current_cost;

    double t = cfg.t_start;
    // The tolerance is the lowest temperature value allowed: anneal until the
    // geometric schedule drops below it.
    while (t >= cfg.tolerance && result.meta.temperature_steps < cfg.max_chains) {
        for (int step = 0; step < cfg.markov_len; ++step) {
            const int i = rng.next_int(0, n - 1);
            int j = rng.next_int(0, n - 2);
            if (j >= i) ++j;
            std::swap(current[i], current[j]);
            const double candidate_cost = instance_cost(inst, current);
            const double delta = candidate_cost - current_cost;
            bool accept = delta <= 0.0;
            if (!accept) accept = rng.next_unit() < std::exp(-delta / t);
            if (accept) {
                current_cost = candidate_cost;
                ++result.meta.moves_accepted;
                if (current_cost < result.cost) {
                    result.cost = current_cost;
                    result.pi = current;
                }
            } else {
                std::swap(current[i], current[j]);
            }
        }
        t *= cfg.cooldown;
        ++result.meta.temperature_steps;
    }

    result.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace copq
