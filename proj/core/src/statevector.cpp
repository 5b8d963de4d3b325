#include "copq/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "copq/errors.hpp"
#include "copq/rng.hpp"

namespace copq {

int max_qubits() {
    if (const char* env = std::getenv("COPQ_MAX_QUBITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 25;
}

Statevector::Statevector(int width_) : width(width_) {
    if (width < 0) throw std::invalid_argument("negative width");
    amps.assign(std::size_t{1} << width, {0.0, 0.0});
    amps[0] = {1.0, 0.0};
}

double Statevector::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

namespace {

using cplx = std::complex<double>;

// amps[..0_q..], amps[..1_q..] <- 2x2 matrix times the pair, for every pair.
void apply_1q(Statevector& state, int q, cplx m00, cplx m01, cplx m10, cplx m11) {
    const std::size_t mask = std::size_t{1} << q;
    const std::size_t dim = state.amps.size();
    for (std::size_t base = 0; base < dim; base += 2 * mask) {
        for (std::size_t low = 0; low < mask; ++low) {
            const std::size_t i0 = base | low;
            const std::size_t i1 = i0 | mask;
            const cplx a0 = state.amps[i0];
            const cplx a1 = state.amps[i1];
            state.amps[i0] = m00 * a0 + m01 * a1;
            state.amps[i1] = m10 * a0 + m11 * a1;
        }
    }
}

void apply_diag_1q(Statevector& state, int q, cplx d0, cplx d1) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        state.amps[i] *= (i & mask) ? d1 : d0;
    }
}

} // namespace

void apply_gate(Statevector& state, const Gate& g, const std::vector<double>& bindings) {
    if (g.q0 < 0 || g.q0 >= state.width) {
        throw std::invalid_argument("gate qubit out of range");
    }
    if (gate_is_two_qubit(g.kind) &&
        (g.q1 < 0 || g.q1 >= state.width || g.q1 == g.q0)) {
        throw std::invalid_argument("gate qubit out of range");
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::ID:
            return;
        case GateKind::X:
            apply_1q(state, g.q0, 0, 1, 1, 0);
            return;
        case GateKind::SX:
            apply_1q(state, g.q0, cplx{0.5, 0.5}, cplx{0.5, -0.5}, cplx{0.5, -0.5},
                     cplx{0.5, 0.5});
            return;
        case GateKind::H:
            apply_1q(state, g.q0, inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
            return;
        case GateKind::RZ: {
            const double t = g.angle(bindings);
            apply_diag_1q(state, g.q0, std::polar(1.0, -t / 2.0), std::polar(1.0, t / 2.0));
            return;
        }
        case GateKind::RY: {
            const double t = g.angle(bindings);
            const double c = std::cos(t / 2.0);
            const double s = std::sin(t / 2.0);
            apply_1q(state, g.q0, c, -s, s, c);
            return;
        }
        case GateKind::RX: {
            const double t = g.angle(bindings);
            const double c = std::cos(t / 2.0);
            const double s = std::sin(t / 2.0);
            apply_1q(state, g.q0, c, cplx{0.0, -s}, cplx{0.0, -s}, c);
            return;
        }
        case GateKind::CX: {
            const std::size_t cmask = std::size_t{1} << g.q0;
            const std::size_t tmask = std::size_t{1} << g.q1;
            for (std::size_t i = 0; i < state.amps.size(); ++i) {
                if ((i & cmask) && !(i & tmask)) {
                    std::swap(state.amps[i], state.amps[i | tmask]);
                }
            }
            return;
        }
        case GateKind::RZZ: {
            const double t = g.angle(bindings);
            const cplx same = std::polar(1.0, -t / 2.0);
            const cplx diff = std::polar(1.0, t / 2.0);
            const std::size_t m0 = std::size_t{1} << g.q0;
            const std::size_t m1 = std::size_t{1} << g.q1;
            for (std::size_t i = 0; i < state.amps.size(); ++i) {
                const bool b0 = i & m0;
                const bool b1 = i & m1;
                state.amps[i] *= (b0 == b1) ? same : diff;
            }
            return;
        }
    }
    throw std::invalid_argument("unknown gate kind");
}

Statevector run(const Circuit& circ, const std::vector<double>& bindings) {
    if (circ.width > max_qubits()) {
        throw SizeLimitError("circuit width " + std::to_string(circ.width) +
                             " exceeds the simulator cap of " + std::to_string(max_qubits()) +
                             " qubits (override with COPQ_MAX_QUBITS)");
    }
    Statevector state(circ.width);
    for (const Gate& g : circ.gates) apply_gate(state, g, bindings);
    return state;
}

ShotDistribution sample(const Statevector& state, long shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be at least 1");

    Rng rng(derive_seed(seed, 0x5a3e));
    std::vector<double> u(static_cast<std::size_t>(shots));
    for (auto& v : u) v = rng.next_unit();
    std::sort(u.begin(), u.end());

    // One sweep over the amplitudes against the sorted uniforms implements the
    // multinomial draw without materializing a cumulative table.
    ShotDistribution dist;
    dist.shots = shots;
    std::size_t next = 0;
    double cum = 0.0;
    const std::size_t dim = state.amps.size();
    for (std::size_t s = 0; s < dim && next < u.size(); ++s) {
        const double p = std::norm(state.amps[s]);
        if (p == 0.0) continue;
        cum += p;
        long hits = 0;
        while (next < u.size() && u[next] < cum) {
            ++hits;
            ++next;
        }
        if (hits > 0) dist.counts[index_to_bits(s, state.width)] += hits;
    }
    if (next < u.size()) {
        // Rounding left cum slightly below 1: the tail belongs to the last
        // nonzero-probability state.
        std::size_t last = dim - 1;
        while (last > 0 && std::norm(state.amps[last]) == 0.0) --last;
        dist.counts[index_to_bits(last, state.width)] +=
            static_cast<long>(u.size() - next);
    }
    return dist;
}

double exact_expectation(const Statevector& state, const IsingHamiltonian& h) {
    if (h.num_qubits != state.width) {
        throw std::invalid_argument("Hamiltonian width does not match state width");
    }
    double value = 0.0;
    for (std::size_t s = 0; s < state.amps.size(); ++s) {
        const double p = std::norm(state.amps[s]);
        if (p != 0.0) value += p * energy_at_index(h, s);
    }
    return value;
}

double exact_expectation(const Statevector& state, const std::vector<double>& diagonal) {
    if (diagonal.size() != state.amps.size()) {
        throw std::invalid_argument("diagonal size does not match state dimension");
    }
    double value = 0.0;
    for (std::size_t s = 0; s < state.amps.size(); ++s) {
        value += std::norm(state.amps[s]) * diagonal[s];
    }
    return value;
}

double estimate_expectation(const Circuit& circ, const std::vector<double>& bindings,
                            const IsingHamiltonian& h, long shots, std::uint64_t seed) {
    if (h.num_qubits != circ.width) {
        throw std::invalid_argument("Hamiltonian width does not match circuit width");
    }
    const Statevector state = run(circ, bindings);
    const ShotDistribution dist = sample(state, shots, seed);
    double value = 0.0;
    for (const auto& [bits, count] : dist.counts) {
        value += static_cast<double>(count) / static_cast<double>(shots) * energy(h, bits);
    }
    return value;
}

} // namespace copq
