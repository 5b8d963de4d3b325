// Test-side reference implementation: builds each gate's full 2^w x 2^w
// matrix column by column from first-principles definitions and applies it by
// dense multiplication. Deliberately shares no kernel code with the library
// simulator so the two can check each other.
#ifndef COPQ_TESTS_DENSE_ORACLE_HPP
#define COPQ_TESTS_DENSE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "copq/circuit.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Matrix = std::vector<std::vector<cplx>>; // [row][col]

inline Matrix one_qubit_matrix(copq::GateKind kind, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case copq::GateKind::X: return {{0, 1}, {1, 0}};
        case copq::GateKind::ID: return {{1, 0}, {0, 1}};
        case copq::GateKind::H: return {{r, r}, {r, -r}};
        case copq::GateKind::SX:
            return {{cplx{0.5, 0.5}, cplx{0.5, -0.5}}, {cplx{0.5, -0.5}, cplx{0.5, 0.5}}};
        case copq::GateKind::RZ:
            return {{std::polar(1.0, -theta / 2.0), 0}, {0, std::polar(1.0, theta / 2.0)}};
        case copq::GateKind::RY: return {{c, -s}, {s, c}};
        case copq::GateKind::RX:
            return {{c, cplx{0.0, -s}}, {cplx{0.0, -s}, c}};
        default: throw std::invalid_argument("not a one-qubit gate");
    }
}

/// Full 2^width x 2^width unitary of a single gate, built by computing the
/// image of every basis column.
inline Matrix gate_unitary(const copq::Gate& g, int width,
                           const std::vector<double>& bindings = {}) {
    const std::size_t dim = std::size_t{1} << width;
    Matrix u(dim, std::vector<cplx>(dim, 0.0));
    if (g.kind == copq::GateKind::CX) {
        for (std::size_t col = 0; col < dim; ++col) {
            std::size_t row = col;
            if (col & (std::size_t{1} << g.q0)) row ^= std::size_t{1} << g.q1;
            u[row][col] = 1.0;
        }
        return u;
    }
    if (g.kind == copq::GateKind::RZZ) {
        const double theta = g.angle(bindings);
        for (std::size_t col = 0; col < dim; ++col) {
            const bool b0 = col & (std::size_t{1} << g.q0);
            const bool b1 = col & (std::size_t{1} << g.q1);
            u[col][col] = std::polar(1.0, (b0 == b1 ? -1.0 : 1.0) * theta / 2.0);
        }
        return u;
    }
    const Matrix m = one_qubit_matrix(g.kind, g.angle(bindings));
    const std::size_t mask = std::size_t{1} << g.q0;
    for (std::size_t col = 0; col < dim; ++col) {
        const int b = (col & mask) ? 1 : 0;
        u[col & ~mask][col] = m[0][b];
        u[col | mask][col] = m[1][b];
    }
    return u;
}

inline std::vector<cplx> apply(const Matrix& u, const std::vector<cplx>& v) {
    std::vector<cplx> out(v.size(), 0.0);
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += u[r][c] * v[c];
    }
    return out;
}

/// |0...0> evolved through the circuit by dense multiplication.
inline std::vector<cplx> simulate(const copq::Circuit& circ,
                                  const std::vector<double>& bindings = {}) {
    std::vector<cplx> v(std::size_t{1} << circ.width, 0.0);
    v[0] = 1.0;
    for (const copq::Gate& g : circ.gates) {
        v = oracle::apply(gate_unitary(g, circ.width, bindings), v);
    }
    return v;
}

/// Largest amplitude deviation after aligning global phase via the overlap.
inline double phase_aligned_distance(const std::vector<cplx>& a,
                                     const std::vector<cplx>& b) {
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) overlap += std::conj(a[i]) * b[i];
    const cplx phase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : cplx{1.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] * phase - b[i]));
    }
    return worst;
}

} // namespace oracle

#endif
