#pragma once

#include "qswitch/dense_matrix.hpp"
#include "qswitch/inputs.hpp"
#include "qswitch/rng.hpp"
#include "qswitch/state_vector.hpp"

namespace qswitch {

// Probability slack below which max(p0, p1) counts as a certain outcome.
inline constexpr double kDeterministicTol = 1e-12;

// Norm threshold for calling a commutator/anticommutator zero on a state.
// Looser than the amplitude tolerance: for in-set operators the branch states
// are exact signed basis vectors, so anything near this threshold is a bug,
// not roundoff.
inline constexpr double kCommutationTol = 1e-9;

// Control-qubit measurement distribution after the interference circuit.
// The protocol is deterministic on its intended inputs, so probabilities are
// reported rather than sampled; sample_outcome() exists for demo traces.
struct SwitchOutcome {
    double p0 = 0.0;
    double p1 = 0.0;
    int decoded_bit = 0;      // argmax of (p0, p1)
    bool deterministic = false; // max(p0, p1) >= 1 - kDeterministicTol
};

enum class CommutationClass {
    CommutingOnPsi,     // ||[U_A, U_B] psi|| <= kCommutationTol
    AnticommutingOnPsi, // ||{U_A, U_B} psi|| <= kCommutationTol
    Neither,
};

const char* to_string(CommutationClass c);

// Full interference circuit on an explicit joint register: control qubit
// (most significant) prepared in |+>, then
//   |0><0| (x) U_B U_A + |1><1| (x) U_A U_B,
// then a Hadamard on the control. Returns the control distribution, which
// satisfies p0 = ||{U_A,U_B} psi||^2 / 4 and p1 = ||[U_A,U_B] psi||^2 / 4.
SwitchOutcome run_switch(const PlayerInput& alice, const PlayerInput& bob,
                         const StateVector& target);

// Closed form on the all-zeros target: both orders map |0> to +-|x (+) y>,
// differing only in sign, so the decoded bit is f_A(x_B) XOR f_B(x_A).
// Two table lookups, no amplitude array.
SwitchOutcome run_switch_fast(const PlayerInput& alice, const PlayerInput& bob);

CommutationClass classify_commutation(const PlayerInput& alice,
                                      const PlayerInput& bob,
                                      const StateVector& psi);

// General-unitary form, total on operators outside the player set.
CommutationClass classify_commutation(const DenseMatrix& a, const DenseMatrix& b,
                                      const StateVector& psi);

// Draws 0 with probability p0. Demo/trace plumbing only.
int sample_outcome(const SwitchOutcome& outcome, SplitMix64& rng);

} // namespace qswitch
