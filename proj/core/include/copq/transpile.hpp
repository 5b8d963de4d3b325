#ifndef COPQ_TRANSPILE_HPP
#define COPQ_TRANSPILE_HPP

#include "copq/circuit.hpp"

namespace copq {

/// True for the hardware vocabulary {CX, ID, RZ, SX, X}.
bool is_basis_gate(GateKind kind);

/// Rewrites every gate into the basis vocabulary. The output unitary equals
/// the input's up to a global phase; symbolic parameters are preserved.
Circuit transpile_to_basis(const Circuit& circ);

} // namespace copq

#endif
