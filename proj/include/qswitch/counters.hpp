#pragma once

#include "qswitch/game.hpp"

namespace qswitch {

// Channel-use counter: a qutrit at each laboratory's output port, bumped
// (value + 1) mod 3 every time a system leaves that laboratory. One use per
// lab separates the switch and one-way protocols from genuine two-way
// communication.

enum class Protocol { Switch, OneWay, TwoWay };
const char* to_string(Protocol p);

struct CounterReport {
    Protocol protocol = Protocol::Switch;
    int alice_counter = 0;
    int bob_counter = 0;
    double expectation_alice = 0.0; // <N> with N = sum_i i |i><i|
    double expectation_bob = 0.0;
};

CounterReport run_with_counters(Protocol protocol, const GameInstance& inst);

// Max counter 1 for Switch/OneWay vs at least one counter >= 2 for TwoWay.
bool counters_discriminate(const CounterReport& report);

} // namespace qswitch
