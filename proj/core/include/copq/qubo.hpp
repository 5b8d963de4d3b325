#ifndef COPQ_QUBO_HPP
#define COPQ_QUBO_HPP

#include <map>
#include <string>
#include <utility>

#include "copq/instance.hpp"

namespace copq {

/// Quadratic polynomial over binary variables x_k, k in [0, num_vars).
/// For an n-city/facility instance, variable k = i*n + p places row i
/// (city/facility) at column p (tour position/location).
struct QuboModel {
    int num_vars = 0;
    std::map<int, double> linear;
    std::map<std::pair<int, int>, double> quadratic; ///< keys normalized i < j
    double offset = 0.0;
    double penalty = 0.0; ///< one-hot constraint weight used to build the model

    void add_linear(int i, double c);
    /// Accumulates c * x_i * x_j; i == j folds into the linear part (x^2 = x).
    void add_quadratic(int i, int j, double c);
};

/// Evaluates the polynomial at a bit assignment; bits[k] is variable k.
double qubo_eval(const QuboModel& q, const std::string& bits);

/// Tour-cost objective plus one-hot penalties, weight A, on n^2 variables.
QuboModel encode_tsp(const TspInstance& inst, double A);

/// Assignment-cost objective plus one-hot penalties, weight B, on n^2 variables.
QuboModel encode_qap(const QapInstance& inst, double B);

/// Penalty weight strictly above the maximum attainable objective value:
/// n*max(d)+1 for TSP, n^2*max(b)*max(c)+1 for QAP. With this weight every
/// infeasible assignment costs more than every feasible one.
double default_penalty(const ProblemInstance& inst);

QuboModel encode(const ProblemInstance& inst, double penalty);

} // namespace copq

#endif
