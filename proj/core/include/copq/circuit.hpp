#ifndef COPQ_CIRCUIT_HPP
#define COPQ_CIRCUIT_HPP

#include <string>
#include <vector>

#include "copq/gates.hpp"

namespace copq {

/// Ordered gate list over a fixed qubit count with num_params symbolic slots.
struct Circuit {
    int width = 0;
    int num_params = 0;
    std::vector<Gate> gates;

    /// Validates qubit ranges and parameter slots, then appends.
    void add(const Gate& g);
};

struct CircuitMetrics {
    int op_count = 0; ///< gates excluding ID
    int depth = 0;    ///< greedy as-soon-as-possible layering, ID excluded
};

CircuitMetrics circuit_metrics(const Circuit& circ);

/// One gate per line: name, qubits, then the resolved angle for rotations
/// ("RY 0 1.5707963"). Bindings are required only for symbolic circuits.
std::string dump_circuit(const Circuit& circ, const std::vector<double>& bindings = {});

} // namespace copq

#endif
