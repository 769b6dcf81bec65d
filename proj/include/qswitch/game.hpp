#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qswitch/inputs.hpp"
#include "qswitch/rng.hpp"

namespace qswitch {

// One round of the exchange-evaluation game: Alice holds (x, f), Bob (y, g),
// and the referee wants f(y) XOR g(x).
struct GameInstance {
    PlayerInput alice;
    PlayerInput bob;

    GameInstance() = default;
    GameInstance(PlayerInput a, PlayerInput b);
    int arity() const { return alice.arity(); }
};

int ee_eval(const PlayerInput& alice, const PlayerInput& bob);
int ee_eval(const GameInstance& inst);

// 2^(2^n + n - 1) distinct player inputs at arity n. Overflows 64 bits past
// n = 5, which is an explicit capacity error.
std::uint64_t input_count(int n);

// Input with the given rank in lexicographic (x bits, f table) order.
PlayerInput input_at(int n, std::uint64_t ordinal);

// All inputs in lexicographic order. Materializes the full set; n <= 4.
std::vector<PlayerInput> enumerate_inputs(int n);

// Uniform over the valid inputs; table bit 0 forced to 0.
PlayerInput sample_input(int n, SplitMix64& rng);

enum class SweepMode { Exhaustive, Sampled };
enum class SwitchPath { Fast, Full }; // Full = fast path plus state-vector cross-check

const char* to_string(SweepMode m);
const char* to_string(SwitchPath p);

struct VerifyOptions {
    int n = 1;
    SweepMode mode = SweepMode::Exhaustive;
    SwitchPath path = SwitchPath::Full;
    std::uint64_t samples = 100000; // sampled mode only
    std::uint64_t seed = 1;         // sampled mode only
    double tolerance = 1e-12;       // determinism slack: require max(p0,p1) >= 1 - tolerance
    int workers = 0;                // 0 = default_worker_count()
};

struct SweepReport {
    int n = 0;
    SweepMode mode = SweepMode::Exhaustive;
    SwitchPath path = SwitchPath::Full;
    std::uint64_t pairs_tested = 0;
    std::uint64_t failures = 0;
    double max_probability_deviation = 0.0; // max of 1 - max(p0,p1) over full-path runs
    double wall_time_s = 0.0;
    std::optional<std::uint64_t> rng_seed;  // set for sampled sweeps
    std::optional<std::string> first_failure;
};

// Runs the switch protocol against direct truth-table evaluation over every
// ordered input pair (exhaustive) or over seeded samples. Exhaustive capacity:
// n <= 2 with the state-vector cross-check, n <= 3 fast path only.
SweepReport verify_switch_protocol(const VerifyOptions& options);

enum class Party { Alice, Bob, Charlie };
const char* to_string(Party p);

struct SendEvent {
    Party from;
    Party to;
    std::uint64_t bits;
};

struct TwoWayResult {
    int answer = 0;
    std::uint64_t bits_communicated = 0; // always 2n + 2
    std::vector<SendEvent> trace;
};

// Classical two-way protocol: the players swap their vectors, evaluate
// locally, and each forwards one answer bit to Charlie (Alice first; the
// order is fixed only so logs are deterministic).
TwoWayResult two_way_baseline(const GameInstance& inst);

struct OneWayResult {
    int answer = 0;
    std::uint64_t bits_sent = 0;          // 2^n + n - 1, Alice's whole input
    std::uint64_t qubits_dense_coded = 0; // ceil(bits_sent / 2)
    std::vector<SendEvent> trace;
};

// Causally ordered one-way witness: Alice forwards her entire input, Bob
// answers. The dense-coding halving is reported arithmetically.
OneWayResult one_way_identity_baseline(const GameInstance& inst);

} // namespace qswitch
