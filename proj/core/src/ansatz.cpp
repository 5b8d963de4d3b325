#include "copq/ansatz.hpp"

#include <stdexcept>

namespace copq {

AnsatzForm parse_ansatz_form(const std::string& name) {
    if (name == "TL" || name == "tl" || name == "two_local") return AnsatzForm::two_local;
    if (name == "RA" || name == "ra" || name == "real_amplitudes") {
        return AnsatzForm::real_amplitudes;
    }
    if (name == "QAOA" || name == "qaoa") return AnsatzForm::qaoa;
    throw std::invalid_argument("unknown ansatz form '" + name +
                                "' (expected TL, RA, or qaoa)");
}

const char* ansatz_form_name(AnsatzForm form) {
    switch (form) {
        case AnsatzForm::two_local: return "TL";
        case AnsatzForm::real_amplitudes: return "RA";
        case AnsatzForm::qaoa: return "QAOA";
    }
    return "?";
}

int ansatz_param_count(const AnsatzSpec& spec) {
    if (spec.reps_or_p < 1) throw std::invalid_argument("reps/p must be at least 1");
    if (spec.form == AnsatzForm::qaoa) return 2 * spec.reps_or_p;
    return spec.width * (spec.reps_or_p + 1);
}

namespace {

// Both VQE forms here are RY layers with linear CX entanglement; they share
// one builder. Parameter slots advance layer by layer, qubit-ascending.
Circuit build_ry_linear(const AnsatzSpec& spec) {
    Circuit circ;
    circ.width = spec.width;
    circ.num_params = ansatz_param_count(spec);
    int slot = 0;
    for (int rep = 0; rep < spec.reps_or_p; ++rep) {
        for (int q = 0; q < spec.width; ++q) circ.add(Gate::ry_sym(q, slot++));
        for (int q = 0; q + 1 < spec.width; ++q) circ.add(Gate::cx(q, q + 1));
    }
    for (int q = 0; q < spec.width; ++q) circ.add(Gate::ry_sym(q, slot++));
    return circ;
}

Circuit build_qaoa(const AnsatzSpec& spec, const IsingHamiltonian& h) {
    if (h.num_qubits != spec.width) {
        throw std::invalid_argument("Hamiltonian width does not match ansatz width");
    }
    const int p = spec.reps_or_p;
    Circuit circ;
    circ.width = spec.width;
    circ.num_params = 2 * p;
    for (int q = 0; q < spec.width; ++q) circ.add(Gate::h(q));
    for (int j = 0; j < p; ++j) {
        const int gamma = j;
        const int beta = p + j;
        // exp(-i gamma_j H): RZ(2 gamma c) per Z term, RZZ(2 gamma c) per ZZ
        // term; the constant is a global phase and is dropped.
        for (const auto& term : h.terms) {
            if (term.qubits.size() == 1) {
                circ.add(Gate::rz_sym(term.qubits[0], gamma, 2.0 * term.coeff));
            } else if (term.qubits.size() == 2) {
                circ.add(Gate::rzz_sym(term.qubits[0], term.qubits[1], gamma,
                                       2.0 * term.coeff));
            } else {
                throw std::invalid_argument("cost unitary supports 1- and 2-local terms only");
            }
        }
        for (int q = 0; q < spec.width; ++q) circ.add(Gate::rx_sym(q, beta, 2.0));
    }
    return circ;
}

} // namespace

Circuit build_ansatz(const AnsatzSpec& spec, const IsingHamiltonian* h) {
    if (spec.width < 1) throw std::invalid_argument("ansatz width must be at least 1");
    if (spec.reps_or_p < 1) throw std::invalid_argument("reps/p must be at least 1");
    if (spec.form == AnsatzForm::qaoa) {
        if (h == nullptr) {
            throw std::invalid_argument("QAOA ansatz requires the Hamiltonian");
        }
        return build_qaoa(spec, *h);
    }
    return build_ry_linear(spec);
}

} // namespace copq
