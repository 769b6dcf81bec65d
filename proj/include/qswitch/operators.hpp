#pragma once

#include <span>

#include "qswitch/dense_matrix.hpp"
#include "qswitch/inputs.hpp"
#include "qswitch/state_vector.hpp"

namespace qswitch {

// Player operators are signed permutations of the computational basis:
// X(x) is an index-XOR permutation and D(f) a +-1 sign mask, so no matrix is
// ever materialized on the hot paths. The in-place span forms run on raw
// amplitude blocks (the switch uses them on halves of its joint register);
// the value forms wrap them and carry the contract checks.

void apply_x_inplace(const BitVector& x, std::span<Amplitude> amps);
void apply_diag_inplace(const BoolFn& f, std::span<Amplitude> amps);
void apply_u_inplace(const PlayerInput& u, std::span<Amplitude> amps);

// result[k] = input[k ^ x.bits]
StateVector apply_x(const BitVector& x, const StateVector& s);

// result[k] = (-1)^f(k) * input[k]
StateVector apply_diag(const BoolFn& f, const StateVector& s);

// X(x) D(f): the sign mask first, then the permutation.
StateVector apply_u(const PlayerInput& u, const StateVector& s);

// Matrix of X(x) D(f): entry (z ^ x.bits, z) = (-1)^f(z), one nonzero per
// row and column. Oracle path for cross-checks only.
DenseMatrix dense_matrix(const PlayerInput& u);

StateVector apply_hadamard(int qubit, const StateVector& s);

} // namespace qswitch
