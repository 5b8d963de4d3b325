#ifndef COPQ_STATEVECTOR_HPP
#define COPQ_STATEVECTOR_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "copq/circuit.hpp"
#include "copq/ising.hpp"

namespace copq {

/// Simulator width cap: COPQ_MAX_QUBITS when set to a positive integer,
/// otherwise 25.
int max_qubits();

/// Full complex amplitude vector; qubit k is the k-th least-significant bit
/// of the basis index.
struct Statevector {
    int width = 0;
    std::vector<std::complex<double>> amps;

    Statevector() = default;
    explicit Statevector(int width_); ///< |0...0>

    double norm_sq() const;
};

/// In-place unitary action. Bindings resolve symbolic rotation angles.
void apply_gate(Statevector& state, const Gate& g, const std::vector<double>& bindings = {});

/// |0...0> evolved through the gate list. Throws a size-limit error above the
/// width cap and a binding error on unbound parameters.
Statevector run(const Circuit& circ, const std::vector<double>& bindings = {});

struct ShotDistribution {
    std::map<std::string, long> counts;
    long shots = 0;
};

/// Seeded multinomial draw from |amplitude|^2.
ShotDistribution sample(const Statevector& state, long shots, std::uint64_t seed);

/// Sum over basis states of |amplitude|^2 times the diagonal energy.
double exact_expectation(const Statevector& state, const IsingHamiltonian& h);
/// Same, against a precomputed energy diagonal (faster in optimization loops).
double exact_expectation(const Statevector& state, const std::vector<double>& diagonal);

/// Shot-noise estimate: run, sample, average sampled basis energies.
double estimate_expectation(const Circuit& circ, const std::vector<double>& bindings,
                            const IsingHamiltonian& h, long shots, std::uint64_t seed);

} // namespace copq

#endif
