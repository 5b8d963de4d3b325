#include "copq/transpile.hpp"

#include <numbers>
#include <stdexcept>

namespace copq {

namespace {

constexpr double pi = std::numbers::pi;

// Same rotation with the angle shifted by delta; works for literal and
// symbolic gates because the symbolic form is affine in the binding.
Gate shifted(const Gate& g, GateKind kind, int q, double delta) {
    Gate out;
    out.kind = kind;
    out.q0 = q;
    out.theta = g.theta + delta;
    out.param = g.param;
    out.scale = g.scale;
    out.offset = g.offset + delta;
    return out;
}

} // namespace

bool is_basis_gate(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::ID:
        case GateKind::RZ:
        case GateKind::SX:
        case GateKind::X:
            return true;
        default:
            return false;
    }
}

Circuit transpile_to_basis(const Circuit& circ) {
    Circuit out;
    out.width = circ.width;
    out.num_params = circ.num_params;
    for (const Gate& g : circ.gates) {
        switch (g.kind) {
            case GateKind::CX:
            case GateKind::ID:
            case GateKind::RZ:
            case GateKind::SX:
            case GateKind::X:
                out.add(g);
                break;
            case GateKind::H:
                // H = RZ(pi/2) SX RZ(pi/2) up to a global phase
                out.add(Gate::rz(g.q0, pi / 2.0));
                out.add(Gate::sx(g.q0));
                out.add(Gate::rz(g.q0, pi / 2.0));
                break;
            case GateKind::RY:
                // RY(t) = RZ(pi) SX RZ(t + pi) SX up to a global phase,
                // listed here in application order.
                out.add(Gate::sx(g.q0));
                out.add(shifted(g, GateKind::RZ, g.q0, pi));
                out.add(Gate::sx(g.q0));
                out.add(Gate::rz(g.q0, pi));
                break;
            case GateKind::RX:
                // RX(t) = RZ(pi/2) SX RZ(t + pi) SX RZ(pi/2) up to a phase.
                out.add(Gate::rz(g.q0, pi / 2.0));
                out.add(Gate::sx(g.q0));
                out.add(shifted(g, GateKind::RZ, g.q0, pi));
                out.add(Gate::sx(g.q0));
                out.add(Gate::rz(g.q0, pi / 2.0));
                break;
            case GateKind::RZZ: {
                // exp(-i t Z@Z / 2) = CX (I@RZ(t)) CX, exactly.
                out.add(Gate::cx(g.q0, g.q1));
                out.add(shifted(g, GateKind::RZ, g.q1, 0.0));
                out.add(Gate::cx(g.q0, g.q1));
                break;
            }
            default:
                throw std::invalid_argument("unsupported gate kind in transpile");
        }
    }
    return out;
}

} // namespace copq
