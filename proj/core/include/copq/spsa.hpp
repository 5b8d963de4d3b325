#ifndef COPQ_SPSA_HPP
#define COPQ_SPSA_HPP

#include <cstdint>
#include <functional>
#include <vector>

namespace copq {

struct SpsaConfig {
    int maxiter = 100;
    double a = 0.2;        ///< step-size scale: a_k = a / (k+1)^alpha
    double c = 0.1;        ///< perturbation scale: c_k = c / (k+1)^gamma
    double alpha = 0.602;
    double gamma = 0.101;

    void validate() const;
};

struct SpsaResult {
    std::vector<double> theta; ///< parameters with the lowest observed objective
    double value = 0.0;        ///< that objective value
    std::vector<double> history; ///< every objective evaluation, in call order
};

using Objective = std::function<double(const std::vector<double>&)>;

/// Simultaneous-perturbation minimizer. Each iteration k draws a Rademacher
/// direction, evaluates f at theta +- c_k*delta, and steps against the
/// resulting gradient estimate. Evaluation budget: one initial evaluation,
/// two per iteration, one final evaluation; all are tracked for the returned
/// best point. Deterministic given the seed.
SpsaResult spsa_minimize(const Objective& objective, const std::vector<double>& theta0,
                         const SpsaConfig& cfg, std::uint64_t seed);

/// Suggests a step-size scale so that the first update moves each parameter
/// by roughly target_step: probes the objective around theta0 and scales
/// against the mean observed finite difference. Useful because the raw
/// objective magnitude varies with the Hamiltonian's coefficient scale.
double calibrate_step_size(const Objective& objective, const std::vector<double>& theta0,
                           double c, std::uint64_t seed, int probes = 25,
                           double target_step = 0.6283185307179586);

} // namespace copq

#endif
