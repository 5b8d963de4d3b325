#ifndef COPQ_ISING_HPP
#define COPQ_ISING_HPP

#include <optional>
#include <string>
#include <vector>

#include "copq/instance.hpp"
#include "copq/qubo.hpp"

namespace copq {

/// One product of Pauli-Z operators with a real coefficient.
struct PauliZTerm {
    double coeff = 0.0;
    std::vector<int> qubits; ///< sorted, distinct, size 1 or 2 here
};

/// Diagonal spin Hamiltonian: constant + sum of Z products. Qubit k carries
/// binary variable k; bit 0 maps to Z eigenvalue +1, bit 1 to -1.
struct IsingHamiltonian {
    int num_qubits = 0;
    double constant = 0.0;
    std::vector<PauliZTerm> terms;
};

/// Exact substitution x_k -> (1 - Z_k)/2. Energies of basis states equal the
/// QUBO values of the corresponding bit assignments.
IsingHamiltonian qubo_to_ising(const QuboModel& q);

/// Energy of the basis state written as a bitstring (bits[k] is qubit k).
double energy(const IsingHamiltonian& h, const std::string& bits);

/// Energy of basis state |index>, with qubit k the k-th least-significant bit.
double energy_at_index(const IsingHamiltonian& h, std::uint64_t index);

/// All 2^num_qubits basis energies, indexed like energy_at_index.
/// Guarded at num_qubits <= 20.
std::vector<double> energy_diagonal(const IsingHamiltonian& h);

std::string index_to_bits(std::uint64_t index, int num_qubits);
std::uint64_t bits_to_index(const std::string& bits);

struct GroundState {
    std::string bits;
    double energy = 0.0;
};

/// Exhaustive minimum over all basis states; ties resolve to the
/// lexicographically smallest bitstring. Guarded at num_qubits <= 20.
GroundState ground_state_bruteforce(const IsingHamiltonian& h);

struct DecodedSolution {
    bool feasible = false;
    std::optional<Permutation> pi;
    std::optional<double> cost;
};

/// Reads bits as an n-by-n one-hot matrix (rows = cities/facilities,
/// columns = positions/locations, entry (i, p) at bits[i*n+p]). Feasible iff
/// a permutation matrix; then pi and the classical cost are filled in.
/// For TSP pi[p] is the city at tour position p; for QAP pi[u] is the
/// location of facility u.
DecodedSolution decode(const std::string& bits, const ProblemInstance& inst);

/// Inverse of decode's permutation reading: the one-hot bitstring for pi.
std::string permutation_to_bits(const Permutation& pi, bool tsp_layout);

/// {"num_qubits": ..., "constant": ..., "terms": [{"coeff": ..., "qubits": [...]}]}
std::string hamiltonian_to_json(const IsingHamiltonian& h);

} // namespace copq

#endif
