#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qswitch/game.hpp"
#include "qswitch/inputs.hpp"

namespace qswitch {

// A referee function under test. Defaults to ee_eval; negative controls pass
// deliberately broken games.
using GameFn = std::function<int(const PlayerInput&, const PlayerInput&)>;

GameFn ee_game();

// Bob-side input (y, g) certifying that two Alice inputs lead to different
// game values.
struct Witness {
    BitVector y;
    BoolFn g;
    enum class Case { DifferentX, DifferentF } case_tag = Case::DifferentX;
};

// f1(y) XOR f2(y) XOR g(x1) XOR g(x2) == 1, i.e. the game separates a1, a2
// at this witness.
bool witness_separates(const Witness& w, const PlayerInput& a1,
                       const PlayerInput& a2);

// Closed-form witness for any two distinct inputs: if the vectors differ,
// y = 0 with g the indicator of the nonzero vector (roles swapped if needed);
// otherwise any point where the functions differ, with g = 0.
Witness construct_witness(const PlayerInput& a1, const PlayerInput& a2);

struct SeparabilityResult {
    bool pass = true;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<PlayerInput, PlayerInput>> counterexample;
};

// For every unordered pair of distinct inputs, searches all of Z_2^n x F_n
// for a separating witness. Brute force over witnesses; n <= 2.
SeparabilityResult check_pairwise_separability(int n, const GameFn& game);
SeparabilityResult check_pairwise_separability(int n);

// Same claim via construct_witness + witness_separates per pair; n <= 3.
SeparabilityResult check_pairwise_separability_constructive(int n);

struct RowDistinctnessResult {
    bool pass = true;
    std::uint64_t rows = 0;
    std::uint64_t distinct_rows = 0;
};

// Injectivity of input -> (game value against every Bob input): distinct
// inputs must produce distinct game-value rows. n <= 2.
RowDistinctnessResult check_rows_distinct(int n, const GameFn& game);
RowDistinctnessResult check_rows_distinct(int n);

struct MessageBound {
    std::uint64_t dimension = 1; // ceil(sqrt(input_count))
    int qubits = 0;              // ceil(log2(dimension))
};

// Minimum transmitted Hilbert-space dimension for deterministic one-way
// evaluation with unlimited shared entanglement, given the input-set size.
MessageBound min_message_dimension(std::uint64_t input_count);

// Same bound when the input set has 2^log2_count elements; the dimension is
// reported only while it fits in 64 bits.
std::optional<std::uint64_t> exact_dimension_for_log2_count(int log2_count);
int message_qubits_for_log2_count(int log2_count); // ceil(log2_count / 2)

struct DenseCodingReport {
    bool pass = false;
    // decode_probability[m] = probability of decoding message m correctly
    std::array<double, 4> decode_probability{};
    std::array<int, 4> decoded{};
};

// Two classical bits through one transmitted qubit plus a shared Bell pair:
// Alice applies I, X, Z or XZ to her half, Bob measures in the Bell basis.
// With skip_encoding the protocol is deliberately broken and every message
// decodes as 00.
DenseCodingReport run_dense_coding_demo(bool skip_encoding = false);

struct ShatteringCertificate {
    int n = 0;
    std::vector<PlayerInput> columns;      // (y, zero fn) for every y != 0
    std::vector<PlayerInput> assignments;  // indexed by subset mask over columns
    std::uint64_t verified_size = 0;       // |columns| once verified
};

// Builds the shattered column set of size 2^n - 1 realized by indicator
// functions; n <= 4 (2^15 subsets).
ShatteringCertificate build_shattering_certificate(int n);

struct ShatteringVerification {
    bool pass = false;
    std::uint64_t subsets_checked = 0;
};

// Independent re-check of a certificate: every subset's assignment must
// reproduce the subset's indicator pattern through ee_eval alone.
ShatteringVerification verify_shattering_certificate(ShatteringCertificate& cert);

// -eps*log2(eps) - (1-eps)*log2(1-eps), with the 0 and 1 endpoints mapped
// to 0.
double binary_entropy(double eps);

struct BoundReport {
    int n = 0;
    double epsilon = 0.0;
    std::optional<std::uint64_t> min_message_dimension; // exact while it fits
    int min_message_qubits = 0;
    double deterministic_causal_qubits = 0.0; // (2^n + n - 1) / 2
    std::uint64_t vc_bound_formula = 0;       // 2^(n-1)
    std::uint64_t vc_bound_constructive = 0;  // 2^n - 1
    double bounded_error_lower_bound = 0.0;   // (1 - H(eps)) * 2^(n-2)
    int switch_qubits = 0;                    // n
    std::uint64_t two_way_classical_bits = 0; // 2n + 2
    double separation_ratio = 0.0;            // bounded_error_lower_bound / n
};

// One row of the separation table. epsilon in [0, 1/2]; n in [1, 62].
BoundReport compute_bound_report(int n, double epsilon);

} // namespace qswitch
