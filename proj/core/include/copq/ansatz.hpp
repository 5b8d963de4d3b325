#ifndef COPQ_ANSATZ_HPP
#define COPQ_ANSATZ_HPP

#include <string>

#include "copq/circuit.hpp"
#include "copq/ising.hpp"

namespace copq {

enum class AnsatzForm { two_local, real_amplitudes, qaoa };

/// Parses "TL"/"two_local", "RA"/"real_amplitudes", "QAOA"/"qaoa".
AnsatzForm parse_ansatz_form(const std::string& name);
const char* ansatz_form_name(AnsatzForm form);

struct AnsatzSpec {
    AnsatzForm form = AnsatzForm::two_local;
    int reps_or_p = 1; ///< entangling repetitions (VQE forms) or depth p (QAOA)
    int width = 0;
};

/// Parameter count implied by an AnsatzSpec: width*(reps+1) for the VQE
/// forms, 2*p for QAOA.
int ansatz_param_count(const AnsatzSpec& spec);

/// VQE forms: alternating full RY layers and a linear CX chain, closing with a
/// final RY layer. QAOA: H on every qubit, then p blocks of the cost unitary
/// (RZ / RZZ per Hamiltonian term, angle 2*gamma_j*coeff) followed by the
/// RX(2*beta_j) mixer; parameter order gamma_1..gamma_p, beta_1..beta_p.
/// The Hamiltonian is required exactly for the QAOA form.
Circuit build_ansatz(const AnsatzSpec& spec, const IsingHamiltonian* h = nullptr);

} // namespace copq

#endif
