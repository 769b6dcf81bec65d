#include "qswitch/game.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <sstream>

#include "qswitch/errors.hpp"
#include "qswitch/parallel.hpp"
#include "qswitch/quantum_switch.hpp"

namespace qswitch {

GameInstance::GameInstance(PlayerInput a, PlayerInput b)
    : alice(std::move(a)), bob(std::move(b)) {
    check_arity_match(alice.arity(), bob.arity(), "GameInstance");
}

int ee_eval(const PlayerInput& alice, const PlayerInput& bob) {
    check_arity_match(alice.arity(), bob.arity(), "ee_eval");
    return int(alice.f.value(bob.x.bits)) ^ int(bob.f.value(alice.x.bits));
}

int ee_eval(const GameInstance& inst) { return ee_eval(inst.alice, inst.bob); }

std::uint64_t input_count(int n) {
    if (n < 1) throw std::invalid_argument("input_count: arity must be positive");
    if (n > 5) {
        throw CapacityError("input_count: 2^(2^n + n - 1) exceeds 64 bits for "
                            "n > 5, got n = " + std::to_string(n));
    }
    int exponent = (1 << n) + n - 1;
    return std::uint64_t(1) << exponent;
}

PlayerInput input_at(int n, std::uint64_t ordinal) {
    std::uint64_t count = input_count(n);
    if (ordinal >= count) {
        throw std::out_of_range("input_at: ordinal beyond input set");
    }
    int free_bits = (1 << n) - 1; // table entries other than f(0)
    std::uint64_t x = ordinal >> free_bits;
    std::uint64_t t = ordinal & ((std::uint64_t(1) << free_bits) - 1);
    BoolFn f(n);
    for (int b = 0; b < free_bits; ++b) {
        if ((t >> b) & 1u) f.set(std::uint64_t(b) + 1, true);
    }
    return PlayerInput(BitVector(x, n), std::move(f));
}

std::vector<PlayerInput> enumerate_inputs(int n) {
    if (n > 4) {
        throw CapacityError("enumerate_inputs: materializing the input set is "
                            "limited to n <= 4 (n = 4 already has 524288 "
                            "inputs), got n = " + std::to_string(n));
    }
    std::uint64_t count = input_count(n);
    std::vector<PlayerInput> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(input_at(n, k));
    }
    return out;
}

PlayerInput sample_input(int n, SplitMix64& rng) {
    if (n < 1 || n > kMaxArity) {
        throw std::invalid_argument("sample_input: arity out of range");
    }
    std::uint64_t x = rng.next_below(std::uint64_t(1) << n);
    std::uint64_t table_bits = std::uint64_t(1) << n;
    std::vector<std::uint64_t> words((table_bits + 63) / 64);
    for (auto& w : words) w = rng.next();
    if (table_bits < 64) {
        words.back() &= (std::uint64_t(1) << table_bits) - 1;
    }
    words[0] &= ~std::uint64_t(1); // f(0) = 0
    return PlayerInput(BitVector(x, n), BoolFn::from_words(n, std::move(words)));
}

const char* to_string(SweepMode m) {
    return m == SweepMode::Exhaustive ? "exhaustive" : "sampled";
}

const char* to_string(SwitchPath p) {
    return p == SwitchPath::Fast ? "fast" : "full";
}

const char* to_string(Party p) {
    switch (p) {
        case Party::Alice: return "alice";
        case Party::Bob: return "bob";
        case Party::Charlie: return "charlie";
    }
    return "?";
}

namespace {

struct SweepAccum {
    std::uint64_t pairs = 0;
    std::uint64_t failures = 0;
    double max_deviation = 0.0;
    std::optional<std::string> first_failure;
};

void merge_into(SweepAccum& total, const SweepAccum& part) {
    total.pairs += part.pairs;
    total.failures += part.failures;
    total.max_deviation = std::max(total.max_deviation, part.max_deviation);
    if (!total.first_failure && part.first_failure) {
        total.first_failure = part.first_failure;
    }
}

void check_instance(const PlayerInput& alice, const PlayerInput& bob,
                    const VerifyOptions& opt, const StateVector& zero_target,
                    SweepAccum& accum) {
    int expected = ee_eval(alice, bob);
    SwitchOutcome fast = run_switch_fast(alice, bob);
    bool ok = fast.decoded_bit == expected && fast.deterministic;
    if (opt.path == SwitchPath::Full) {
        SwitchOutcome full = run_switch(alice, bob, zero_target);
        double certainty = std::max(full.p0, full.p1);
        accum.max_deviation = std::max(accum.max_deviation, 1.0 - certainty);
        ok = ok && full.decoded_bit == expected &&
             certainty >= 1.0 - opt.tolerance;
    } else {
        ok = ok && std::max(fast.p0, fast.p1) >= 1.0 - opt.tolerance;
    }
    accum.pairs += 1;
    if (!ok) {
        accum.failures += 1;
        if (!accum.first_failure) {
            std::ostringstream msg;
            msg << "alice=" << alice.to_string() << " bob=" << bob.to_string()
                << " expected=" << expected;
            accum.first_failure = msg.str();
        }
    }
}

} // namespace

SweepReport verify_switch_protocol(const VerifyOptions& options) {
    const int n = options.n;
    if (n < 1 || n > kMaxArity) {
        throw std::invalid_argument("verify_switch_protocol: arity out of range");
    }
    if (options.mode == SweepMode::Exhaustive) {
        if (options.path == SwitchPath::Full && n > 2) {
            throw CapacityError("verify_switch_protocol: exhaustive full-path "
                                "sweeps are limited to n <= 2, got n = " +
                                std::to_string(n));
        }
        if (n > 3) {
            throw CapacityError("verify_switch_protocol: exhaustive sweeps are "
                                "limited to n <= 3 (fast path), got n = " +
                                std::to_string(n));
        }
    }

    int workers = options.workers > 0 ? options.workers : default_worker_count();
    auto start = std::chrono::steady_clock::now();

    std::vector<SweepAccum> parts(workers);
    const StateVector zero_target(n); // |0...0>, shared read-only

    if (options.mode == SweepMode::Exhaustive) {
        const std::vector<PlayerInput> inputs = enumerate_inputs(n);
        const std::uint64_t count = inputs.size();
        parallel_chunks(0, count * count, workers,
                        [&](int w, std::uint64_t lo, std::uint64_t hi) {
                            for (std::uint64_t p = lo; p < hi; ++p) {
                                check_instance(inputs[p / count], inputs[p % count],
                                               options, zero_target, parts[w]);
                            }
                        });
    } else {
        parallel_chunks(0, options.samples, workers,
                        [&](int w, std::uint64_t lo, std::uint64_t hi) {
                            SplitMix64 rng = SplitMix64::fork(options.seed, w);
                            for (std::uint64_t p = lo; p < hi; ++p) {
                                PlayerInput alice = sample_input(n, rng);
                                PlayerInput bob = sample_input(n, rng);
                                check_instance(alice, bob, options, zero_target,
                                               parts[w]);
                            }
                        });
    }

    SweepAccum total;
    for (const auto& part : parts) merge_into(total, part);

    auto elapsed = std::chrono::steady_clock::now() - start;

    SweepReport report;
    report.n = n;
    report.mode = options.mode;
    report.path = options.path;
    report.pairs_tested = total.pairs;
    report.failures = total.failures;
    report.max_probability_deviation = total.max_deviation;
    report.wall_time_s = std::chrono::duration<double>(elapsed).count();
    if (options.mode == SweepMode::Sampled) report.rng_seed = options.seed;
    report.first_failure = total.first_failure;
    return report;
}

TwoWayResult two_way_baseline(const GameInstance& inst) {
    const std::uint64_t n = inst.arity();
    TwoWayResult out;
    // Alice and Bob exchange vectors, evaluate locally, then each reports one
    // bit to Charlie.
    int alice_bit = inst.alice.f.value(inst.bob.x.bits); // f(y)
    int bob_bit = inst.bob.f.value(inst.alice.x.bits);   // g(x)
    out.answer = alice_bit ^ bob_bit;
    out.trace = {
        {Party::Alice, Party::Bob, n},
        {Party::Bob, Party::Alice, n},
        {Party::Alice, Party::Charlie, 1},
        {Party::Bob, Party::Charlie, 1},
    };
    for (const auto& event : out.trace) out.bits_communicated += event.bits;
    return out;
}

OneWayResult one_way_identity_baseline(const GameInstance& inst) {
    const int n = inst.arity();
    OneWayResult out;
    out.bits_sent = (std::uint64_t(1) << n) + std::uint64_t(n) - 1;
    out.qubits_dense_coded = (out.bits_sent + 1) / 2;
    // Bob holds both inputs after the transfer and evaluates everything.
    out.answer = ee_eval(inst);
    out.trace = {
        {Party::Alice, Party::Bob, out.bits_sent},
        {Party::Bob, Party::Charlie, 1},
    };
    return out;
}

} // namespace qswitch
