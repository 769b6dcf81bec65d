// End-to-end checks of the qswitch binary: exit-code contract, report files,
// seeded reproducibility.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_helpers.hpp"

using cli::Json;

TEST_CASE("binary is available") {
    REQUIRE(!cli::path().empty());
}

TEST_CASE("verify exit codes and report schema") {
    CHECK(cli::run("verify --n 1") == 0);

    std::string out = cli::temp_path("verify.json");
    CHECK(cli::run("verify --n 2 --mode exhaustive --out " + out) == 0);
    Json j = cli::load_json(out);
    CHECK(j.contains("config"));
    CHECK(j.contains("report"));
    CHECK(j.contains("version"));
    CHECK(j["config"]["command"] == "verify");
    CHECK(j["config"]["mode"] == "exhaustive");
    CHECK(j["report"]["pairs_tested"] == 1024);
    CHECK(j["report"]["failures"] == 0);
    CHECK(j["report"]["max_probability_deviation"].get<double>() < 1e-12);
    std::remove(out.c_str());
}

TEST_CASE("usage and capacity errors exit 2") {
    CHECK(cli::run("verify --n 3 --mode exhaustive --path full") == 2);
    CHECK(cli::run("verify") == 2);            // missing --n
    CHECK(cli::run("verify --n 1 --mode nonsense") == 2);
    CHECK(cli::run("") == 2);                  // missing subcommand
    CHECK(cli::run("bounds --n-min 3 --n-max 2") == 2);
    CHECK(cli::run("bounds --epsilon 0.7 --n-min 1 --n-max 1") == 2);
    CHECK(cli::run("--help") == 0);
}

TEST_CASE("verified violations exit 1") {
    // A negative tolerance demands max(p0,p1) >= 2, so every pair fails.
    CHECK(cli::run("verify --n 1 --tolerance -1") == 1);
}

TEST_CASE("seeded verify runs reproduce byte-identical reports modulo timing") {
    std::string out1 = cli::temp_path("repro1.json");
    std::string out2 = cli::temp_path("repro2.json");
    std::string args = "verify --n 4 --samples 5000 --seed 42 --out ";
    REQUIRE(cli::run(args + out1) == 0);
    REQUIRE(cli::run(args + out2) == 0);

    Json a = cli::load_json(out1);
    Json b = cli::load_json(out2);
    cli::scrub_timing(a);
    cli::scrub_timing(b);
    CHECK(a == b);
    CHECK(a["report"]["rng_seed"] == 42);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("bounds report and table") {
    std::string out = cli::temp_path("bounds.json");
    REQUIRE(cli::run("bounds --n-min 1 --n-max 10 --epsilon 0 --out " + out) == 0);
    Json j = cli::load_json(out);
    const Json& rows = j["report"]["rows"];
    REQUIRE(rows.size() == 10);
    CHECK(rows[9]["n"] == 10);
    CHECK(rows[9]["bounded_error_lower_bound"].get<double>() == 256.0);
    CHECK(rows[9]["switch_qubits"] == 10);
    CHECK(rows[9]["two_way_classical_bits"] == 22);
    CHECK(rows[1]["deterministic_causal_qubits"].get<double>() == 2.5);
    CHECK(j["report"]["all_checks_pass"] == true);

    // Separability entries: exhaustive at n = 1, 2; constructive at n = 3.
    const Json& sep = j["report"]["separability"];
    REQUIRE(sep.size() == 3);
    CHECK(sep[0]["method"] == "exhaustive");
    CHECK(sep[2]["method"] == "constructive");
    for (const auto& entry : sep) CHECK(entry["pass"] == true);
    for (const auto& entry : j["report"]["shattering"]) {
        CHECK(entry["pass"] == true);
    }
    CHECK(j["report"]["dense_coding"]["pass"] == true);
    std::remove(out.c_str());
}

TEST_CASE("bounds with epsilon one half") {
    std::string out = cli::temp_path("bounds_half.json");
    REQUIRE(cli::run("bounds --epsilon 0.5 --n-min 4 --n-max 4 --out " + out) == 0);
    Json j = cli::load_json(out);
    CHECK(j["report"]["rows"][0]["bounded_error_lower_bound"].get<double>() == 0.0);
    std::remove(out.c_str());
}

TEST_CASE("bounds CSV export") {
    std::string out = cli::temp_path("bounds.csv");
    REQUIRE(cli::run("bounds --n-min 1 --n-max 3 --format csv --out " + out) == 0);
    std::string csv = cli::slurp(out);
    CHECK(csv.rfind("n,epsilon,switch_qubits,", 0) == 0);
    int lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 4); // header + 3 rows
    CHECK(csv.find('\r') == std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("counters command") {
    std::string out = cli::temp_path("counters.json");
    REQUIRE(cli::run("counters --n 2 --samples 8 --seed 5 --out " + out) == 0);
    Json j = cli::load_json(out);
    const Json& counters = j["report"]["counters"];
    REQUIRE(counters.size() == 3);
    CHECK(counters[0]["protocol"] == "switch");
    CHECK(counters[0]["alice_counter"] == 1);
    CHECK(counters[1]["protocol"] == "one_way");
    CHECK(counters[2]["protocol"] == "two_way");
    CHECK(counters[2]["alice_counter"] == 2);
    CHECK(counters[2]["bob_counter"] == 2);
    CHECK(j["report"]["discrimination_pass"] == true);

    // No timing fields at all: reruns are byte-identical.
    std::string out2 = cli::temp_path("counters2.json");
    REQUIRE(cli::run("counters --n 2 --samples 8 --seed 5 --out " + out2) == 0);
    CHECK(cli::slurp(out) == cli::slurp(out2));
    std::remove(out.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("bench reports both paths and the fast path wins") {
    std::string out = cli::temp_path("bench.json");
    REQUIRE(cli::run("bench --n 2 --samples 20000 --seed 3 --out " + out) == 0);
    Json j = cli::load_json(out);
    REQUIRE(j["report"].contains("fast"));
    REQUIRE(j["report"].contains("full"));
    double fast_time = j["report"]["fast"]["wall_time_s"].get<double>();
    double full_time = j["report"]["full"]["wall_time_s"].get<double>();
    CHECK(full_time > fast_time);
    if (j["report"].contains("speedup_ratio")) {
        CHECK(j["report"]["speedup_ratio"].get<double>() > 1.0);
    }
    // Same seed, same instances: decoded checksums agree across paths.
    CHECK(j["report"]["fast"]["decoded_checksum"] ==
          j["report"]["full"]["decoded_checksum"]);
    std::remove(out.c_str());
}
