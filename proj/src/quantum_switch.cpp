#include "qswitch/quantum_switch.hpp"

#include <cmath>
#include <stdexcept>

#include "qswitch/errors.hpp"
#include "qswitch/operators.hpp"

namespace qswitch {

const char* to_string(CommutationClass c) {
    switch (c) {
        case CommutationClass::CommutingOnPsi: return "commuting_on_psi";
        case CommutationClass::AnticommutingOnPsi: return "anticommuting_on_psi";
        case CommutationClass::Neither: return "neither";
    }
    return "?";
}

static SwitchOutcome outcome_from_probabilities(double p0, double p1) {
    SwitchOutcome out;
    out.p0 = std::min(std::max(p0, 0.0), 1.0);
    out.p1 = std::min(std::max(p1, 0.0), 1.0);
    out.decoded_bit = out.p1 > out.p0 ? 1 : 0;
    out.deterministic = std::max(out.p0, out.p1) >= 1.0 - kDeterministicTol;
    return out;
}

SwitchOutcome run_switch(const PlayerInput& alice, const PlayerInput& bob,
                         const StateVector& target) {
    check_arity_match(alice.arity(), bob.arity(), "run_switch");
    check_arity_match(alice.arity(), target.qubit_count(), "run_switch");
    if (!target.is_normalized()) {
        throw std::invalid_argument("run_switch: target state is not normalized");
    }
    const int m = target.qubit_count();
    if (m + 1 > kMaxQubits) {
        throw CapacityError("run_switch: control + target needs " +
                            std::to_string(m + 1) + " qubits, limit is " +
                            std::to_string(kMaxQubits));
    }

    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::uint64_t half = std::uint64_t(1) << m;

    // |+>_c (x) |psi>_t with the control as the top qubit.
    StateVector joint(m + 1);
    auto amps = joint.amplitudes();
    for (std::uint64_t k = 0; k < half; ++k) {
        Amplitude a = target[k] * inv_sqrt2;
        amps[k] = a;
        amps[half + k] = a;
    }

    // Control 0: Alice then Bob. Control 1: Bob then Alice.
    auto branch0 = amps.first(half);
    auto branch1 = amps.subspan(half);
    apply_u_inplace(alice, branch0);
    apply_u_inplace(bob, branch0);
    apply_u_inplace(bob, branch1);
    apply_u_inplace(alice, branch1);

    // Hadamard on the control qubit.
    double p0 = 0.0;
    double p1 = 0.0;
    for (std::uint64_t k = 0; k < half; ++k) {
        Amplitude a = (amps[k] + amps[half + k]) * inv_sqrt2;
        Amplitude b = (amps[k] - amps[half + k]) * inv_sqrt2;
        p0 += std::norm(a);
        p1 += std::norm(b);
    }
    return outcome_from_probabilities(p0, p1);
}

SwitchOutcome run_switch_fast(const PlayerInput& alice, const PlayerInput& bob) {
    check_arity_match(alice.arity(), bob.arity(), "run_switch_fast");
    int bit = int(alice.f.value(bob.x.bits)) ^ int(bob.f.value(alice.x.bits));
    SwitchOutcome out;
    out.p0 = bit ? 0.0 : 1.0;
    out.p1 = bit ? 1.0 : 0.0;
    out.decoded_bit = bit;
    out.deterministic = true;
    return out;
}

static CommutationClass classify_branches(const StateVector& alice_then_bob,
                                          const StateVector& bob_then_alice) {
    // alice_then_bob = U_B U_A psi, bob_then_alice = U_A U_B psi.
    double commutator_norm = (bob_then_alice - alice_then_bob).norm();
    double anticommutator_norm = (bob_then_alice + alice_then_bob).norm();
    bool commutes = commutator_norm <= kCommutationTol;
    bool anticommutes = anticommutator_norm <= kCommutationTol;
    if (commutes && anticommutes) {
        throw std::logic_error("classify_commutation: both norms vanish; "
                               "state is effectively zero");
    }
    if (commutes) return CommutationClass::CommutingOnPsi;
    if (anticommutes) return CommutationClass::AnticommutingOnPsi;
    return CommutationClass::Neither;
}

CommutationClass classify_commutation(const PlayerInput& alice,
                                      const PlayerInput& bob,
                                      const StateVector& psi) {
    check_arity_match(alice.arity(), bob.arity(), "classify_commutation");
    check_arity_match(alice.arity(), psi.qubit_count(), "classify_commutation");
    if (!psi.is_normalized()) {
        throw std::invalid_argument("classify_commutation: psi is not normalized");
    }
    StateVector ab = apply_u(bob, apply_u(alice, psi));
    StateVector ba = apply_u(alice, apply_u(bob, psi));
    return classify_branches(ab, ba);
}

CommutationClass classify_commutation(const DenseMatrix& a, const DenseMatrix& b,
                                      const StateVector& psi) {
    if (a.dim() != b.dim() || a.dim() != psi.size()) {
        throw std::invalid_argument("classify_commutation: dimension mismatch");
    }
    if (!psi.is_normalized()) {
        throw std::invalid_argument("classify_commutation: psi is not normalized");
    }
    StateVector ab = b.apply(a.apply(psi));
    StateVector ba = a.apply(b.apply(psi));
    return classify_branches(ab, ba);
}

int sample_outcome(const SwitchOutcome& outcome, SplitMix64& rng) {
    return rng.next_double() < outcome.p0 ? 0 : 1;
}

} // namespace qswitch
