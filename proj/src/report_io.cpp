#include "qswitch/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qswitch::io {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_value(const Json& value, std::string& out, int indent, int depth) {
    const std::string pad(std::size_t(indent) * (depth + 1), ' ');
    const std::string close_pad(std::size_t(indent) * depth, ' ');
    switch (value.type()) {
        case Json::value_t::object: {
            if (value.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, element] : value.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += Json(key).dump();
                out += ": ";
                dump_value(element, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (value.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& element : value) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_value(element, out, indent, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(value.get<double>());
            return;
        default:
            out += value.dump();
            return;
    }
}

} // namespace

std::string dump_json(const Json& value, int indent) {
    std::string out;
    dump_value(value, out, indent, 0);
    out += "\n";
    return out;
}

Json to_json(const SweepReport& report) {
    Json j;
    j["n"] = report.n;
    j["mode"] = to_string(report.mode);
    j["path"] = to_string(report.path);
    j["pairs_tested"] = report.pairs_tested;
    j["failures"] = report.failures;
    j["max_probability_deviation"] = report.max_probability_deviation;
    if (report.rng_seed) {
        j["rng_seed"] = *report.rng_seed;
    } else {
        j["rng_seed"] = nullptr;
    }
    if (report.first_failure) {
        j["first_failure"] = *report.first_failure;
    }
    j["wall_time_s"] = report.wall_time_s;
    return j;
}

Json to_json(const BoundReport& report) {
    Json j;
    j["n"] = report.n;
    j["epsilon"] = report.epsilon;
    if (report.min_message_dimension) {
        j["min_message_dimension"] = *report.min_message_dimension;
    } else {
        j["min_message_dimension"] = nullptr;
    }
    j["min_message_qubits"] = report.min_message_qubits;
    j["deterministic_causal_qubits"] = report.deterministic_causal_qubits;
    j["vc_bound_formula"] = report.vc_bound_formula;
    j["vc_bound_constructive"] = report.vc_bound_constructive;
    j["bounded_error_lower_bound"] = report.bounded_error_lower_bound;
    j["switch_qubits"] = report.switch_qubits;
    j["two_way_classical_bits"] = report.two_way_classical_bits;
    j["separation_ratio"] = report.separation_ratio;
    return j;
}

Json to_json(const CounterReport& report) {
    Json j;
    j["protocol"] = to_string(report.protocol);
    j["alice_counter"] = report.alice_counter;
    j["bob_counter"] = report.bob_counter;
    j["expectation_alice"] = report.expectation_alice;
    j["expectation_bob"] = report.expectation_bob;
    return j;
}

Json report_envelope(Json config, Json report) {
    Json j;
    j["config"] = std::move(config);
    j["report"] = std::move(report);
    j["version"] = kReportVersion;
    return j;
}

std::string bound_table_csv(const std::vector<BoundReport>& rows) {
    std::string out =
        "n,epsilon,switch_qubits,deterministic_causal_qubits,"
        "min_message_qubits,min_message_dimension,vc_bound_formula,"
        "vc_bound_constructive,bounded_error_lower_bound,"
        "two_way_classical_bits,separation_ratio\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += "," + format_double(r.epsilon);
        out += "," + std::to_string(r.switch_qubits);
        out += "," + format_double(r.deterministic_causal_qubits);
        out += "," + std::to_string(r.min_message_qubits);
        out += ",";
        if (r.min_message_dimension) {
            out += std::to_string(*r.min_message_dimension);
        }
        out += "," + std::to_string(r.vc_bound_formula);
        out += "," + std::to_string(r.vc_bound_constructive);
        out += "," + format_double(r.bounded_error_lower_bound);
        out += "," + std::to_string(r.two_way_classical_bits);
        out += "," + format_double(r.separation_ratio);
        out += "\n";
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    file << content;
    if (!file) {
        throw std::runtime_error("failed writing " + path);
    }
}

} // namespace qswitch::io
