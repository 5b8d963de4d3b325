#ifndef COPQ_GATES_HPP
#define COPQ_GATES_HPP

#include <string>
#include <vector>

namespace copq {

enum class GateKind { X, SX, RZ, RY, RX, H, ID, CX, RZZ };

bool gate_is_rotation(GateKind kind); ///< RZ, RY, RX, RZZ carry an angle
bool gate_is_two_qubit(GateKind kind); ///< CX, RZZ
const char* gate_name(GateKind kind);

/// One circuit operation. Rotation angles are either a literal (param < 0)
/// or the affine form scale * binding[param] + offset, which lets symbolic
/// circuits survive transpilation (every basis decomposition used here is
/// affine in the original angle).
struct Gate {
    GateKind kind = GateKind::ID;
    int q0 = 0;
    int q1 = -1;         ///< second qubit for CX (target) and RZZ
    double theta = 0.0;  ///< literal angle when param < 0
    int param = -1;      ///< symbolic parameter slot, or -1
    double scale = 1.0;
    double offset = 0.0;

    static Gate x(int q);
    static Gate sx(int q);
    static Gate h(int q);
    static Gate id(int q);
    static Gate rz(int q, double theta);
    static Gate ry(int q, double theta);
    static Gate rx(int q, double theta);
    static Gate cx(int control, int target);
    static Gate rzz(int a, int b, double theta);

    static Gate rz_sym(int q, int param, double scale = 1.0, double offset = 0.0);
    static Gate ry_sym(int q, int param, double scale = 1.0, double offset = 0.0);
    static Gate rx_sym(int q, int param, double scale = 1.0, double offset = 0.0);
    static Gate rzz_sym(int a, int b, int param, double scale = 1.0, double offset = 0.0);

    /// Resolved angle; throws BindingError on an unbound symbolic slot.
    double angle(const std::vector<double>& bindings) const;
};

} // namespace copq

#endif
