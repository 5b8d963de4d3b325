#include "copq/ising.hpp"

#include <map>
#include <stdexcept>

#include <json.hpp>

#include "copq/errors.hpp"

namespace copq {

IsingHamiltonian qubo_to_ising(const QuboModel& q) {
    IsingHamiltonian h;
    h.num_qubits = q.num_vars;
    h.constant = q.offset;

    std::map<std::vector<int>, double> acc;
    for (const auto& [i, c] : q.linear) {
        // c*x = c/2 - (c/2) Z
        h.constant += c / 2.0;
        acc[{i}] += -c / 2.0;
    }
    for (const auto& [key, c] : q.quadratic) {
        // c*x_i*x_j = c/4 - (c/4) Z_i - (c/4) Z_j + (c/4) Z_i Z_j
        h.constant += c / 4.0;
        acc[{key.first}] += -c / 4.0;
        acc[{key.second}] += -c / 4.0;
        acc[{key.first, key.second}] += c / 4.0;
    }
    for (const auto& [support, c] : acc) {
        if (c != 0.0) h.terms.push_back({c, support});
    }
    return h;
}

double energy(const IsingHamiltonian& h, const std::string& bits) {
    if (static_cast<int>(bits.size()) != h.num_qubits) {
        throw std::invalid_argument("bitstring length does not match qubit count");
    }
    double value = h.constant;
    for (const auto& term : h.terms) {
        double z = term.coeff;
        for (int q : term.qubits) z *= (bits[q] == '1') ? -1.0 : 1.0;
        value += z;
    }
    return value;
}

double energy_at_index(const IsingHamiltonian& h, std::uint64_t index) {
    double value = h.constant;
    for (const auto& term : h.terms) {
        double z = term.coeff;
        for (int q : term.qubits) z *= ((index >> q) & 1u) ? -1.0 : 1.0;
        value += z;
    }
    return value;
}

std::vector<double> energy_diagonal(const IsingHamiltonian& h) {
    if (h.num_qubits > 20) {
        throw SizeLimitError("energy diagonal is limited to 20 qubits, got " +
                             std::to_string(h.num_qubits));
    }
    const std::uint64_t dim = std::uint64_t{1} << h.num_qubits;
    std::vector<double> diag(dim, h.constant);
    // Add each term across the whole diagonal; cheaper than re-walking the
    // term list per basis state.
    for (const auto& term : h.terms) {
        for (std::uint64_t s = 0; s < dim; ++s) {
            double z = term.coeff;
            for (int q : term.qubits) z *= ((s >> q) & 1u) ? -1.0 : 1.0;
            diag[s] += z;
        }
    }
    return diag;
}

std::string index_to_bits(std::uint64_t index, int num_qubits) {
    std::string bits(num_qubits, '0');
    for (int k = 0; k < num_qubits; ++k) {
        if ((index >> k) & 1u) bits[k] = '1';
    }
    return bits;
}

std::uint64_t bits_to_index(const std::string& bits) {
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            index |= std::uint64_t{1} << k;
        } else if (bits[k] != '0') {
            throw std::invalid_argument("bitstring may contain only '0' and '1'");
        }
    }
    return index;
}

GroundState ground_state_bruteforce(const IsingHamiltonian& h) {
    if (h.num_qubits > 20) {
        throw SizeLimitError("ground-state enumeration is limited to 20 qubits, got " +
                             std::to_string(h.num_qubits));
    }
    const std::uint64_t dim = std::uint64_t{1} << h.num_qubits;
    std::uint64_t best = 0;
    double best_energy = energy_at_index(h, 0);
    std::string best_bits = index_to_bits(0, h.num_qubits);
    for (std::uint64_t s = 1; s < dim; ++s) {
        const double e = energy_at_index(h, s);
        if (e < best_energy) {
            best = s;
            best_energy = e;
            best_bits = index_to_bits(s, h.num_qubits);
        } else if (e == best_energy) {
            std::string bits = index_to_bits(s, h.num_qubits);
            if (bits < best_bits) {
                best = s;
                best_bits = std::move(bits);
            }
        }
    }
    (void)best;
    return {best_bits, best_energy};
}

DecodedSolution decode(const std::string& bits, const ProblemInstance& inst) {
    const int n = instance_size(inst);
    if (static_cast<int>(bits.size()) != n * n) {
        throw std::invalid_argument("bitstring length must be n^2");
    }
    std::vector<int> row_ones(n, 0);
    std::vector<int> col_ones(n, 0);
    std::vector<int> row_to_col(n, -1);
    std::vector<int> col_to_row(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int p = 0; p < n; ++p) {
            const char b = bits[i * n + p];
            if (b != '0' && b != '1') {
                throw std::invalid_argument("bitstring may contain only '0' and '1'");
            }
            if (b == '1') {
                ++row_ones[i];
                ++col_ones[p];
                row_to_col[i] = p;
                col_to_row[p] = i;
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        if (row_ones[k] != 1 || col_ones[k] != 1) return {};
    }

    DecodedSolution out;
    out.feasible = true;
    out.pi = is_tsp(inst) ? col_to_row : row_to_col;
    out.cost = instance_cost(inst, *out.pi);
    return out;
}

std::string permutation_to_bits(const Permutation& pi, bool tsp_layout) {
    const int n = static_cast<int>(pi.size());
    if (!is_permutation(pi, n)) throw std::invalid_argument("not a permutation");
    std::string bits(static_cast<std::size_t>(n) * n, '0');
    for (int k = 0; k < n; ++k) {
        if (tsp_layout) {
            bits[pi[k] * n + k] = '1'; // city pi[k] occupies tour position k
        } else {
            bits[k * n + pi[k]] = '1'; // facility k occupies location pi[k]
        }
    }
    return bits;
}

std::string hamiltonian_to_json(const IsingHamiltonian& h) {
    nlohmann::ordered_json j;
    j["num_qubits"] = h.num_qubits;
    j["constant"] = h.constant;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& term : h.terms) {
        j["terms"].push_back({{"coeff", term.coeff}, {"qubits", term.qubits}});
    }
    return j.dump(2);
}

} // namespace copq
