// Command-line harness: protocol verification sweeps, the lower-bound table,
// channel-use counter demos and throughput benchmarks, with JSON/CSV reports.
//
// Exit codes: 0 all checks pass, 1 a verified violation, 2 usage or capacity
// error.

#include <array>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qswitch/bounds.hpp"
#include "qswitch/counters.hpp"
#include "qswitch/errors.hpp"
#include "qswitch/game.hpp"
#include "qswitch/parallel.hpp"
#include "qswitch/quantum_switch.hpp"
#include "qswitch/report_io.hpp"

using qswitch::io::Json;

namespace {

struct VerifyArgs {
    int n = 1;
    std::string mode = "auto";
    std::string path = "auto";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    double tolerance = 1e-12;
    std::string out;
    std::string format = "json";
};

struct BoundsArgs {
    int n_min = 1;
    int n_max = 10;
    double epsilon = 0.0;
    std::string out;
    std::string format = "json";
};

struct CountersArgs {
    int n = 2;
    std::uint64_t samples = 16;
    std::uint64_t seed = 1;
    std::string out;
};

struct BenchArgs {
    int n = 2;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::string path = "auto";
    std::string out;
};

void emit(const std::string& out_path, const Json& envelope) {
    if (!out_path.empty()) {
        qswitch::io::write_text_file(out_path, qswitch::io::dump_json(envelope));
    }
}

int run_verify(const VerifyArgs& args) {
    qswitch::VerifyOptions options;
    options.n = args.n;
    options.mode = (args.mode == "auto")
                       ? (args.n <= 2 ? qswitch::SweepMode::Exhaustive
                                      : qswitch::SweepMode::Sampled)
                       : (args.mode == "exhaustive" ? qswitch::SweepMode::Exhaustive
                                                    : qswitch::SweepMode::Sampled);
    options.path = (args.path == "auto")
                       ? (args.n <= 2 ? qswitch::SwitchPath::Full
                                      : qswitch::SwitchPath::Fast)
                       : (args.path == "full" ? qswitch::SwitchPath::Full
                                              : qswitch::SwitchPath::Fast);
    options.samples = args.samples;
    options.seed = args.seed;
    options.tolerance = args.tolerance;

    qswitch::SweepReport report = qswitch::verify_switch_protocol(options);

    std::cout << "verify: n=" << report.n << " mode=" << to_string(report.mode)
              << " path=" << to_string(report.path) << " seed=" << args.seed
              << "\n";
    std::cout << "  pairs tested: " << report.pairs_tested << "\n";
    std::cout << "  failures: " << report.failures << "\n";
    std::cout << "  max probability deviation: "
              << report.max_probability_deviation << "\n";
    if (report.first_failure) {
        std::cout << "  first failure: " << *report.first_failure << "\n";
    }
    std::cout << "  wall time: " << report.wall_time_s << " s\n";

    Json config;
    config["command"] = "verify";
    config["n"] = options.n;
    config["mode"] = to_string(options.mode);
    config["path"] = to_string(options.path);
    config["samples"] = options.samples;
    config["seed"] = options.seed;
    config["tolerance"] = options.tolerance;
    config["workers"] = qswitch::default_worker_count();
    config["format"] = "json";
    emit(args.out, qswitch::io::report_envelope(config, qswitch::io::to_json(report)));

    return report.failures == 0 ? 0 : 1;
}

int run_bounds(const BoundsArgs& args) {
    if (args.n_min < 1 || args.n_min > args.n_max) {
        std::cerr << "bounds: need 1 <= n-min <= n-max\n";
        return 2;
    }

    bool all_pass = true;
    std::vector<qswitch::BoundReport> rows;
    for (int n = args.n_min; n <= args.n_max; ++n) {
        rows.push_back(qswitch::compute_bound_report(n, args.epsilon));
    }

    Json separability = Json::array();
    for (int n = args.n_min; n <= std::min(args.n_max, 3); ++n) {
        qswitch::SeparabilityResult result;
        const char* method;
        if (n <= 2) {
            result = qswitch::check_pairwise_separability(n);
            method = "exhaustive";
        } else {
            result = qswitch::check_pairwise_separability_constructive(n);
            method = "constructive";
        }
        all_pass = all_pass && result.pass;
        Json entry;
        entry["n"] = n;
        entry["method"] = method;
        entry["pairs_checked"] = result.pairs_checked;
        entry["pass"] = result.pass;
        separability.push_back(entry);
        std::cout << "separability n=" << n << " (" << method
                  << "): " << (result.pass ? "pass" : "FAIL") << " ("
                  << result.pairs_checked << " pairs)\n";
    }

    Json distinct = Json::array();
    for (int n = args.n_min; n <= std::min(args.n_max, 2); ++n) {
        qswitch::RowDistinctnessResult result = qswitch::check_rows_distinct(n);
        all_pass = all_pass && result.pass;
        Json entry;
        entry["n"] = n;
        entry["rows"] = result.rows;
        entry["distinct_rows"] = result.distinct_rows;
        entry["pass"] = result.pass;
        distinct.push_back(entry);
        std::cout << "row distinctness n=" << n << ": "
                  << (result.pass ? "pass" : "FAIL") << "\n";
    }

    Json shattering = Json::array();
    for (int n = args.n_min; n <= std::min(args.n_max, 4); ++n) {
        qswitch::ShatteringCertificate cert = qswitch::build_shattering_certificate(n);
        qswitch::ShatteringVerification verification =
            qswitch::verify_shattering_certificate(cert);
        all_pass = all_pass && verification.pass;
        Json entry;
        entry["n"] = n;
        entry["set_size"] = cert.columns.size();
        entry["verified_size"] = cert.verified_size;
        entry["subsets_checked"] = verification.subsets_checked;
        entry["pass"] = verification.pass;
        shattering.push_back(entry);
        std::cout << "shattering n=" << n << ": "
                  << (verification.pass ? "pass" : "FAIL") << " (size "
                  << cert.verified_size << ", " << verification.subsets_checked
                  << " subsets)\n";
    }

    qswitch::DenseCodingReport dense = qswitch::run_dense_coding_demo();
    all_pass = all_pass && dense.pass;
    Json dense_json;
    dense_json["pass"] = dense.pass;
    dense_json["decode_probability"] = dense.decode_probability;
    std::cout << "dense coding demo: " << (dense.pass ? "pass" : "FAIL") << "\n";

    std::cout << "bound table (epsilon=" << args.epsilon << "):\n";
    std::cout << "  n  switch  causal_one_way  bounded_error_bound  ratio\n";
    for (const auto& r : rows) {
        std::cout << "  " << r.n << "  " << r.switch_qubits << "  "
                  << r.deterministic_causal_qubits << "  "
                  << r.bounded_error_lower_bound << "  " << r.separation_ratio
                  << "\n";
    }

    Json config;
    config["command"] = "bounds";
    config["n_min"] = args.n_min;
    config["n_max"] = args.n_max;
    config["epsilon"] = args.epsilon;
    config["format"] = args.format;

    if (!args.out.empty() && args.format == "csv") {
        qswitch::io::write_text_file(args.out, qswitch::io::bound_table_csv(rows));
    } else {
        Json rows_json = Json::array();
        for (const auto& r : rows) rows_json.push_back(qswitch::io::to_json(r));
        Json report;
        report["rows"] = rows_json;
        report["separability"] = separability;
        report["row_distinctness"] = distinct;
        report["shattering"] = shattering;
        report["dense_coding"] = dense_json;
        report["all_checks_pass"] = all_pass;
        emit(args.out, qswitch::io::report_envelope(config, report));
    }

    return all_pass ? 0 : 1;
}

int run_counters(const CountersArgs& args) {
    qswitch::SplitMix64 rng(args.seed);
    const std::array<qswitch::Protocol, 3> protocols = {
        qswitch::Protocol::Switch, qswitch::Protocol::OneWay,
        qswitch::Protocol::TwoWay};

    bool all_pass = true;
    std::vector<qswitch::CounterReport> last;
    for (std::uint64_t k = 0; k < args.samples; ++k) {
        qswitch::GameInstance inst(qswitch::sample_input(args.n, rng),
                                   qswitch::sample_input(args.n, rng));
        last.clear();
        for (auto protocol : protocols) {
            qswitch::CounterReport report = qswitch::run_with_counters(protocol, inst);
            all_pass = all_pass && qswitch::counters_discriminate(report);
            last.push_back(report);
        }
    }

    for (const auto& report : last) {
        std::cout << to_string(report.protocol) << ": counters ("
                  << report.alice_counter << ", " << report.bob_counter
                  << "), <N> = (" << report.expectation_alice << ", "
                  << report.expectation_bob << ")\n";
    }
    std::cout << "discrimination over " << args.samples << " instances: "
              << (all_pass ? "pass" : "FAIL") << "\n";

    Json config;
    config["command"] = "counters";
    config["n"] = args.n;
    config["samples"] = args.samples;
    config["seed"] = args.seed;

    Json counters_json = Json::array();
    for (const auto& report : last) {
        counters_json.push_back(qswitch::io::to_json(report));
    }
    Json report;
    report["instances_tested"] = args.samples;
    report["counters"] = counters_json;
    report["discrimination_pass"] = all_pass;
    emit(args.out, qswitch::io::report_envelope(config, report));

    return all_pass ? 0 : 1;
}

int run_bench(const BenchArgs& args) {
    bool run_fast = args.path != "full";
    bool run_full = args.path == "full" || args.path == "both" ||
                    (args.path == "auto" && args.n <= 12);

    // Pregenerated pairs keep RNG and allocation cost out of the timed loop.
    qswitch::SplitMix64 rng(args.seed);
    std::uint64_t distinct = std::min<std::uint64_t>(args.samples, 256);
    if (distinct == 0) {
        std::cerr << "bench: need samples >= 1\n";
        return 2;
    }
    std::vector<qswitch::GameInstance> pairs;
    pairs.reserve(distinct);
    for (std::uint64_t k = 0; k < distinct; ++k) {
        pairs.emplace_back(qswitch::sample_input(args.n, rng),
                           qswitch::sample_input(args.n, rng));
    }

    auto time_loop = [&](auto&& body) {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t checksum = 0;
        for (std::uint64_t k = 0; k < args.samples; ++k) {
            checksum += body(pairs[k % distinct]);
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return std::pair<double, std::uint64_t>(seconds, checksum);
    };

    Json report;
    report["n"] = args.n;
    report["samples"] = args.samples;
    report["distinct_instances"] = distinct;

    double fast_time = 0.0;
    double full_time = 0.0;
    if (run_fast) {
        auto [seconds, checksum] = time_loop([](const qswitch::GameInstance& inst) {
            return std::uint64_t(qswitch::run_switch_fast(inst.alice, inst.bob)
                                     .decoded_bit);
        });
        fast_time = seconds;
        Json j;
        j["wall_time_s"] = seconds;
        j["instances_per_second"] = seconds > 0 ? double(args.samples) / seconds : 0.0;
        j["decoded_checksum"] = checksum;
        report["fast"] = j;
        std::cout << "fast path: " << args.samples << " instances in " << seconds
                  << " s\n";
    }
    if (run_full) {
        const qswitch::StateVector zero_target(args.n);
        auto [seconds, checksum] =
            time_loop([&](const qswitch::GameInstance& inst) {
                return std::uint64_t(
                    qswitch::run_switch(inst.alice, inst.bob, zero_target)
                        .decoded_bit);
            });
        full_time = seconds;
        Json j;
        j["wall_time_s"] = seconds;
        j["instances_per_second"] = seconds > 0 ? double(args.samples) / seconds : 0.0;
        j["decoded_checksum"] = checksum;
        report["full"] = j;
        std::cout << "full path: " << args.samples << " instances in " << seconds
                  << " s\n";
    }
    if (run_fast && run_full && fast_time > 0.0) {
        report["speedup_ratio"] = full_time / fast_time;
        std::cout << "speedup (full/fast wall time): " << full_time / fast_time
                  << "\n";
    }

    Json config;
    config["command"] = "bench";
    config["n"] = args.n;
    config["samples"] = args.samples;
    config["seed"] = args.seed;
    config["path"] = args.path;
    emit(args.out, qswitch::io::report_envelope(config, report));

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum-switch exchange-evaluation simulator and bound checker"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "sweep the switch protocol against truth-table evaluation");
    verify->add_option("--n", verify_args.n, "register arity")->required();
    verify->add_option("--mode", verify_args.mode, "auto|exhaustive|sampled")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    verify->add_option("--path", verify_args.path,
                       "auto|fast|full (full adds the state-vector cross-check)")
        ->check(CLI::IsMember({"auto", "fast", "full"}));
    verify->add_option("--samples", verify_args.samples, "sample count (sampled mode)");
    verify->add_option("--seed", verify_args.seed, "RNG seed, logged in the report");
    verify->add_option("--tolerance", verify_args.tolerance,
                       "determinism slack: require max(p0,p1) >= 1 - tolerance");
    verify->add_option("--out", verify_args.out, "write JSON report here");
    verify->add_option("--format", verify_args.format, "json")
        ->check(CLI::IsMember({"json"}));

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand(
        "bounds", "emit the separation table and run the bound machinery checks");
    bounds->add_option("--n-min", bounds_args.n_min, "first table row");
    bounds->add_option("--n-max", bounds_args.n_max, "last table row");
    bounds->add_option("--epsilon", bounds_args.epsilon,
                       "allowed worst-case error in [0, 0.5]");
    bounds->add_option("--out", bounds_args.out, "write report here");
    bounds->add_option("--format", bounds_args.format, "json|csv (csv: table only)")
        ->check(CLI::IsMember({"json", "csv"}));

    CountersArgs counters_args;
    CLI::App* counters = app.add_subcommand(
        "counters", "channel-use counters for switch/one-way/two-way protocols");
    counters->add_option("--n", counters_args.n, "register arity");
    counters->add_option("--samples", counters_args.samples, "instances to test");
    counters->add_option("--seed", counters_args.seed, "RNG seed");
    counters->add_option("--out", counters_args.out, "write JSON report here");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand(
        "bench", "throughput of the closed-form vs state-vector switch paths");
    bench->add_option("--n", bench_args.n, "register arity")->required();
    bench->add_option("--samples", bench_args.samples, "instances to run");
    bench->add_option("--seed", bench_args.seed, "RNG seed");
    bench->add_option("--path", bench_args.path, "auto|fast|full|both")
        ->check(CLI::IsMember({"auto", "fast", "full", "both"}));
    bench->add_option("--out", bench_args.out, "write JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*verify) return run_verify(verify_args);
        if (*bounds) return run_bounds(bounds_args);
        if (*counters) return run_counters(counters_args);
        if (*bench) return run_bench(bench_args);
    } catch (const qswitch::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
