#include "qswitch/bounds.hpp"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qswitch/errors.hpp"
#include "qswitch/operators.hpp"
#include "qswitch/parallel.hpp"
#include "qswitch/state_vector.hpp"

namespace qswitch {

GameFn ee_game() {
    return [](const PlayerInput& a, const PlayerInput& b) { return ee_eval(a, b); };
}

bool witness_separates(const Witness& w, const PlayerInput& a1,
                       const PlayerInput& a2) {
    int sum = int(a1.f(w.y)) ^ int(a2.f(w.y)) ^ int(w.g(a1.x)) ^ int(w.g(a2.x));
    return sum == 1;
}

Witness construct_witness(const PlayerInput& a1, const PlayerInput& a2) {
    check_arity_match(a1.arity(), a2.arity(), "construct_witness");
    if (a1 == a2) {
        throw std::invalid_argument("construct_witness: inputs must differ");
    }
    const int n = a1.arity();
    Witness w;
    if (!(a1.x == a2.x)) {
        // One of the vectors is nonzero; the indicator of that one works
        // because both functions vanish at y = 0.
        const BitVector& nonzero = a1.x.is_zero() ? a2.x : a1.x;
        w.y = BitVector::zero(n);
        w.g = BoolFn::indicator(nonzero);
        w.case_tag = Witness::Case::DifferentX;
        return w;
    }
    // Same vector, so the functions differ somewhere; that point plus the
    // zero function separates.
    for (std::uint64_t z = 1; z < a1.f.table_size(); ++z) {
        if (a1.f.value(z) != a2.f.value(z)) {
            w.y = BitVector(z, n);
            w.g = BoolFn::zero(n);
            w.case_tag = Witness::Case::DifferentF;
            return w;
        }
    }
    throw std::logic_error("construct_witness: inputs compare unequal but "
                           "tables match");
}

SeparabilityResult check_pairwise_separability(int n, const GameFn& game) {
    if (n > 2) {
        throw CapacityError("check_pairwise_separability: witness brute force "
                            "is limited to n <= 2, got n = " + std::to_string(n));
    }
    const std::vector<PlayerInput> inputs = enumerate_inputs(n);
    SeparabilityResult result;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        for (std::size_t j = i + 1; j < inputs.size(); ++j) {
            result.pairs_checked += 1;
            bool separated = false;
            for (const PlayerInput& witness : inputs) {
                if (game(inputs[i], witness) != game(inputs[j], witness)) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                result.pass = false;
                result.counterexample = {inputs[i], inputs[j]};
                return result;
            }
        }
    }
    return result;
}

SeparabilityResult check_pairwise_separability(int n) {
    return check_pairwise_separability(n, ee_game());
}

SeparabilityResult check_pairwise_separability_constructive(int n) {
    if (n > 3) {
        throw CapacityError("check_pairwise_separability_constructive: pair "
                            "enumeration is limited to n <= 3, got n = " +
                            std::to_string(n));
    }
    const std::vector<PlayerInput> inputs = enumerate_inputs(n);
    const std::size_t count = inputs.size();

    int workers = default_worker_count();
    std::vector<SeparabilityResult> parts(workers);
    parallel_chunks(0, count, workers, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            for (std::uint64_t j = i + 1; j < count; ++j) {
                parts[w].pairs_checked += 1;
                Witness witness = construct_witness(inputs[i], inputs[j]);
                if (!witness_separates(witness, inputs[i], inputs[j])) {
                    if (parts[w].pass) {
                        parts[w].pass = false;
                        parts[w].counterexample = {inputs[i], inputs[j]};
                    }
                }
            }
        }
    });

    SeparabilityResult result;
    for (const auto& part : parts) {
        result.pairs_checked += part.pairs_checked;
        if (!part.pass && result.pass) {
            result.pass = false;
            result.counterexample = part.counterexample;
        }
    }
    return result;
}

RowDistinctnessResult check_rows_distinct(int n, const GameFn& game) {
    if (n > 2) {
        throw CapacityError("check_rows_distinct: row hashing is limited to "
                            "n <= 2, got n = " + std::to_string(n));
    }
    const std::vector<PlayerInput> inputs = enumerate_inputs(n);
    std::set<std::vector<std::uint64_t>> rows;
    for (const PlayerInput& a : inputs) {
        std::vector<std::uint64_t> row((inputs.size() + 63) / 64, 0);
        for (std::size_t j = 0; j < inputs.size(); ++j) {
            if (game(a, inputs[j])) row[j >> 6] |= std::uint64_t(1) << (j & 63);
        }
        rows.insert(std::move(row));
    }
    RowDistinctnessResult result;
    result.rows = inputs.size();
    result.distinct_rows = rows.size();
    result.pass = result.rows == result.distinct_rows;
    return result;
}

RowDistinctnessResult check_rows_distinct(int n) {
    return check_rows_distinct(n, ee_game());
}

MessageBound min_message_dimension(std::uint64_t input_count) {
    if (input_count == 0) {
        throw std::invalid_argument("min_message_dimension: empty input set");
    }
    // Smallest d with d*d >= input_count.
    std::uint64_t d = std::uint64_t(std::ceil(std::sqrt(double(input_count))));
    while (d > 1 && (unsigned __int128)(d - 1) * (d - 1) >= input_count) --d;
    while ((unsigned __int128)d * d < input_count) ++d;
    MessageBound out;
    out.dimension = d;
    out.qubits = d > 1 ? std::bit_width(d - 1) : 0;
    return out;
}

std::optional<std::uint64_t> exact_dimension_for_log2_count(int log2_count) {
    if (log2_count < 0) {
        throw std::invalid_argument("exact_dimension_for_log2_count: negative");
    }
    // ceil(2^(k/2)) needs ceil(k/2) bits; past 63 it leaves 64-bit range.
    if ((log2_count + 1) / 2 > 63 || log2_count > 126) return std::nullopt;
    if (log2_count % 2 == 0) {
        return std::uint64_t(1) << (log2_count / 2);
    }
    unsigned __int128 target = (unsigned __int128)1 << log2_count;
    std::uint64_t lo = std::uint64_t(1) << (log2_count / 2);
    std::uint64_t hi = lo << 1;
    while (lo < hi) { // first d with d*d >= 2^k
        std::uint64_t mid = lo + (hi - lo) / 2;
        if ((unsigned __int128)mid * mid >= target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

int message_qubits_for_log2_count(int log2_count) {
    return (log2_count + 1) / 2;
}

namespace {

// Controlled X on a two-qubit register, control = qubit 0, target = qubit 1.
void apply_cnot01(StateVector& s) {
    std::swap(s[1], s[3]);
}

} // namespace

DenseCodingReport run_dense_coding_demo(bool skip_encoding) {
    DenseCodingReport report;
    report.pass = true;

    // Message bits: bit 0 -> X, bit 1 -> Z, both -> XZ.
    BitVector alice_x(1, 2); // X on Alice's qubit (qubit 0)
    BoolFn alice_z(2);       // Z on Alice's qubit: sign on every odd index
    alice_z.set(1, true);
    alice_z.set(3, true);

    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    for (int message = 0; message < 4; ++message) {
        // Shared Bell pair (|00> + |11>) / sqrt(2); Alice holds qubit 0.
        StateVector s(2);
        s[0] = inv_sqrt2;
        s[3] = inv_sqrt2;

        if (!skip_encoding) {
            if (message & 2) s = apply_diag(alice_z, s);
            if (message & 1) s = apply_x(alice_x, s);
        }

        // Bob's Bell-basis measurement: CNOT then Hadamard on the sent qubit.
        apply_cnot01(s);
        s = apply_hadamard(0, s);

        // Outcome (q0, q1) decodes as message (q0 << 1) | q1.
        double best = -1.0;
        int best_outcome = 0;
        for (int k = 0; k < 4; ++k) {
            double p = std::norm(s[k]);
            if (p > best) {
                best = p;
                best_outcome = k;
            }
        }
        int decoded = ((best_outcome & 1) << 1) | ((best_outcome >> 1) & 1);
        double p_correct = 0.0;
        for (int k = 0; k < 4; ++k) {
            int decode_k = ((k & 1) << 1) | ((k >> 1) & 1);
            if (decode_k == message) p_correct += std::norm(s[k]);
        }
        report.decoded[message] = decoded;
        report.decode_probability[message] = p_correct;
        if (!(decoded == message && p_correct >= 1.0 - 1e-12)) {
            report.pass = false;
        }
    }
    return report;
}

ShatteringCertificate build_shattering_certificate(int n) {
    if (n > 4) {
        throw CapacityError("build_shattering_certificate: subset enumeration "
                            "is limited to n <= 4 (32768 subsets), got n = " +
                            std::to_string(n));
    }
    if (n < 1) {
        throw std::invalid_argument("build_shattering_certificate: bad arity");
    }
    ShatteringCertificate cert;
    cert.n = n;

    const std::uint64_t points = std::uint64_t(1) << n;
    for (std::uint64_t y = 1; y < points; ++y) {
        cert.columns.emplace_back(BitVector(y, n), BoolFn::zero(n));
    }

    const std::uint64_t subset_count = std::uint64_t(1) << cert.columns.size();
    cert.assignments.reserve(subset_count);
    for (std::uint64_t mask = 0; mask < subset_count; ++mask) {
        BoolFn indicator(n);
        for (std::size_t i = 0; i < cert.columns.size(); ++i) {
            if ((mask >> i) & 1u) indicator.set(cert.columns[i].x.bits, true);
        }
        cert.assignments.emplace_back(BitVector::zero(n), std::move(indicator));
    }
    return cert;
}

ShatteringVerification verify_shattering_certificate(ShatteringCertificate& cert) {
    ShatteringVerification result;
    const std::uint64_t subset_count = std::uint64_t(1) << cert.columns.size();
    if (cert.assignments.size() != subset_count) return result;

    for (std::uint64_t mask = 0; mask < subset_count; ++mask) {
        for (std::size_t i = 0; i < cert.columns.size(); ++i) {
            int want = int((mask >> i) & 1u);
            if (ee_eval(cert.assignments[mask], cert.columns[i]) != want) {
                return result;
            }
        }
        result.subsets_checked += 1;
    }
    result.pass = true;
    cert.verified_size = cert.columns.size();
    return result;
}

double binary_entropy(double eps) {
    if (eps < 0.0 || eps > 1.0) {
        throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
    }
    if (eps == 0.0 || eps == 1.0) return 0.0;
    return -eps * std::log2(eps) - (1.0 - eps) * std::log2(1.0 - eps);
}

BoundReport compute_bound_report(int n, double epsilon) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("compute_bound_report: n outside [1, 62]");
    }
    if (epsilon < 0.0 || epsilon > 0.5) {
        throw std::invalid_argument("compute_bound_report: epsilon outside "
                                    "[0, 0.5]");
    }
    const int log2_inputs = (1 << n) + n - 1;

    BoundReport report;
    report.n = n;
    report.epsilon = epsilon;
    report.min_message_dimension = exact_dimension_for_log2_count(log2_inputs);
    report.min_message_qubits = message_qubits_for_log2_count(log2_inputs);
    report.deterministic_causal_qubits = double(log2_inputs) / 2.0;
    report.vc_bound_formula = std::uint64_t(1) << (n - 1);
    report.vc_bound_constructive = (std::uint64_t(1) << n) - 1;
    report.bounded_error_lower_bound =
        (1.0 - binary_entropy(epsilon)) * std::ldexp(1.0, n - 2);
    report.switch_qubits = n;
    report.two_way_classical_bits = 2 * std::uint64_t(n) + 2;
    report.separation_ratio = report.bounded_error_lower_bound / double(n);
    return report;
}

} // namespace qswitch
