#include "copq/circuit.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "copq/errors.hpp"

namespace copq {

bool gate_is_rotation(GateKind kind) {
    return kind == GateKind::RZ || kind == GateKind::RY || kind == GateKind::RX ||
           kind == GateKind::RZZ;
}

bool gate_is_two_qubit(GateKind kind) {
    return kind == GateKind::CX || kind == GateKind::RZZ;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "X";
        case GateKind::SX: return "SX";
        case GateKind::RZ: return "RZ";
        case GateKind::RY: return "RY";
        case GateKind::RX: return "RX";
        case GateKind::H: return "H";
        case GateKind::ID: return "ID";
        case GateKind::CX: return "CX";
        case GateKind::RZZ: return "RZZ";
    }
    return "?";
}

Gate Gate::x(int q) { return {GateKind::X, q}; }
Gate Gate::sx(int q) { return {GateKind::SX, q}; }
Gate Gate::h(int q) { return {GateKind::H, q}; }
Gate Gate::id(int q) { return {GateKind::ID, q}; }
Gate Gate::rz(int q, double theta) { return {GateKind::RZ, q, -1, theta}; }
Gate Gate::ry(int q, double theta) { return {GateKind::RY, q, -1, theta}; }
Gate Gate::rx(int q, double theta) { return {GateKind::RX, q, -1, theta}; }
Gate Gate::cx(int control, int target) { return {GateKind::CX, control, target}; }
Gate Gate::rzz(int a, int b, double theta) { return {GateKind::RZZ, a, b, theta}; }

Gate Gate::rz_sym(int q, int param, double scale, double offset) {
    return {GateKind::RZ, q, -1, 0.0, param, scale, offset};
}
Gate Gate::ry_sym(int q, int param, double scale, double offset) {
    return {GateKind::RY, q, -1, 0.0, param, scale, offset};
}
Gate Gate::rx_sym(int q, int param, double scale, double offset) {
    return {GateKind::RX, q, -1, 0.0, param, scale, offset};
}
Gate Gate::rzz_sym(int a, int b, int param, double scale, double offset) {
    return {GateKind::RZZ, a, b, 0.0, param, scale, offset};
}

double Gate::angle(const std::vector<double>& bindings) const {
    if (param < 0) return theta;
    if (param >= static_cast<int>(bindings.size())) {
        throw BindingError("parameter slot " + std::to_string(param) +
                           " is unbound (got " + std::to_string(bindings.size()) +
                           " bindings)");
    }
    return scale * bindings[param] + offset;
}

void Circuit::add(const Gate& g) {
    if (g.q0 < 0 || g.q0 >= width) throw std::invalid_argument("gate qubit out of range");
    if (gate_is_two_qubit(g.kind)) {
        if (g.q1 < 0 || g.q1 >= width) throw std::invalid_argument("gate qubit out of range");
        if (g.q1 == g.q0) throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    if (g.param >= num_params) {
        throw std::invalid_argument("gate references parameter slot beyond num_params");
    }
    gates.push_back(g);
}

CircuitMetrics circuit_metrics(const Circuit& circ) {
    CircuitMetrics m;
    std::vector<int> busy_until(circ.width, 0);
    for (const Gate& g : circ.gates) {
        if (g.kind == GateKind::ID) continue;
        ++m.op_count;
        int layer = busy_until[g.q0] + 1;
        if (gate_is_two_qubit(g.kind)) layer = std::max(layer, busy_until[g.q1] + 1);
        busy_until[g.q0] = layer;
        if (gate_is_two_qubit(g.kind)) busy_until[g.q1] = layer;
        m.depth = std::max(m.depth, layer);
    }
    return m;
}

std::string dump_circuit(const Circuit& circ, const std::vector<double>& bindings) {
    std::string out;
    char buf[64];
    for (const Gate& g : circ.gates) {
        out += gate_name(g.kind);
        out += ' ';
        out += std::to_string(g.q0);
        if (gate_is_two_qubit(g.kind)) {
            out += ' ';
            out += std::to_string(g.q1);
        }
        if (gate_is_rotation(g.kind)) {
            std::snprintf(buf, sizeof(buf), "%.7f", g.angle(bindings));
            out += ' ';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

} // namespace copq
