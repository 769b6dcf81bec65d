#include "qswitch/counters.hpp"

#include <algorithm>
#include <stdexcept>

namespace qswitch {

const char* to_string(Protocol p) {
    switch (p) {
        case Protocol::Switch: return "switch";
        case Protocol::OneWay: return "one_way";
        case Protocol::TwoWay: return "two_way";
    }
    return "?";
}

namespace {

struct Tally {
    int alice = 0;
    int bob = 0;

    void bump(Party lab) {
        if (lab == Party::Alice) alice = (alice + 1) % 3;
        if (lab == Party::Bob) bob = (bob + 1) % 3;
    }

    bool operator==(const Tally&) const = default;
};

Tally tally_from_trace(const std::vector<SendEvent>& trace) {
    Tally t;
    for (const auto& event : trace) t.bump(event.from);
    return t;
}

} // namespace

CounterReport run_with_counters(Protocol protocol, const GameInstance& inst) {
    Tally tally;
    switch (protocol) {
        case Protocol::Switch: {
            // The target traverses both laboratories in each causal branch;
            // only the order differs. Tally the branches separately and
            // require agreement, which is what licenses reporting a definite
            // counter value instead of a superposed counter state.
            Tally branch_alice_first;
            branch_alice_first.bump(Party::Alice);
            branch_alice_first.bump(Party::Bob);
            Tally branch_bob_first;
            branch_bob_first.bump(Party::Bob);
            branch_bob_first.bump(Party::Alice);
            if (!(branch_alice_first == branch_bob_first)) {
                throw std::logic_error("run_with_counters: causal branches "
                                       "disagree on channel uses");
            }
            tally = branch_alice_first;
            break;
        }
        case Protocol::OneWay:
            tally = tally_from_trace(one_way_identity_baseline(inst).trace);
            break;
        case Protocol::TwoWay:
            tally = tally_from_trace(two_way_baseline(inst).trace);
            break;
    }

    CounterReport report;
    report.protocol = protocol;
    report.alice_counter = tally.alice;
    report.bob_counter = tally.bob;
    report.expectation_alice = double(tally.alice);
    report.expectation_bob = double(tally.bob);
    return report;
}

bool counters_discriminate(const CounterReport& report) {
    int top = std::max(report.alice_counter, report.bob_counter);
    if (report.protocol == Protocol::TwoWay) return top >= 2;
    return top == 1;
}

} // namespace qswitch
