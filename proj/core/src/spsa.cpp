#include "copq/spsa.hpp"

#include <cmath>
#include <stdexcept>

#include "copq/rng.hpp"

namespace copq {

void SpsaConfig::validate() const {
    if (maxiter < 1) throw std::invalid_argument("SPSA maxiter must be at least 1");
    if (a <= 0.0) throw std::invalid_argument("SPSA step scale a must be positive");
    if (c <= 0.0) throw std::invalid_argument("SPSA perturbation scale c must be positive");
}

SpsaResult spsa_minimize(const Objective& objective, const std::vector<double>& theta0,
                         const SpsaConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    if (theta0.empty()) throw std::invalid_argument("SPSA needs at least one parameter");
    const std::size_t dim = theta0.size();

    Rng rng(derive_seed(seed, 0x5b5a));
    std::vector<double> theta = theta0;

    SpsaResult result;
    result.theta = theta0;
    result.value = objective(theta0);
    result.history.push_back(result.value);

    auto consider = [&result](const std::vector<double>& point, double value) {
        if (value < result.value) {
            result.value = value;
            result.theta = point;
        }
    };

    std::vector<double> delta(dim);
    std::vector<double> plus(dim);
    std::vector<double> minus(dim);
    for (int k = 0; k < cfg.maxiter; ++k) {
        const double ak = cfg.a / std::pow(k + 1.0, cfg.alpha);
        const double ck = cfg.c / std::pow(k + 1.0, cfg.gamma);
        for (std::size_t i = 0; i < dim; ++i) {
            delta[i] = rng.next_sign();
            plus[i] = theta[i] + ck * delta[i];
            minus[i] = theta[i] - ck * delta[i];
        }
        const double f_plus = objective(plus);
        result.history.push_back(f_plus);
        consider(plus, f_plus);
        const double f_minus = objective(minus);
        result.history.push_back(f_minus);
        consider(minus, f_minus);

        const double g = (f_plus - f_minus) / (2.0 * ck);
        for (std::size_t i = 0; i < dim; ++i) {
            // delta entries are +-1, so 1/delta[i] = delta[i]
            theta[i] -= ak * g * delta[i];
        }
    }
    const double f_final = objective(theta);
    result.history.push_back(f_final);
    consider(theta, f_final);
    return result;
}

double calibrate_step_size(const Objective& objective, const std::vector<double>& theta0,
                           double c, std::uint64_t seed, int probes, double target_step) {
    if (theta0.empty()) throw std::invalid_argument("SPSA needs at least one parameter");
    if (c <= 0.0) throw std::invalid_argument("perturbation scale c must be positive");
    if (probes < 1) throw std::invalid_argument("probes must be at least 1");

    Rng rng(derive_seed(seed, 0xca1b));
    const std::size_t dim = theta0.size();
    std::vector<double> plus(dim);
    std::vector<double> minus(dim);
    double mean_abs_diff = 0.0;
    for (int k = 0; k < probes; ++k) {
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = rng.next_sign();
            plus[i] = theta0[i] + c * d;
            minus[i] = theta0[i] - c * d;
        }
        mean_abs_diff += std::abs(objective(plus) - objective(minus));
    }
    mean_abs_diff /= probes;
    if (mean_abs_diff == 0.0) return target_step; // flat region: any scale works
    // First-step magnitude per component is a * |f+ - f-| / (2c).
    return target_step * 2.0 * c / mean_abs_diff;
}

} // namespace copq
