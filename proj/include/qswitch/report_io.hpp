#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qswitch/bounds.hpp"
#include "qswitch/counters.hpp"
#include "qswitch/game.hpp"

namespace qswitch::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "0.1.0";

// Serializes with deterministic key order and floating-point values at 17
// significant digits, so identical reports are byte-identical on disk.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(const SweepReport& report);
Json to_json(const BoundReport& report);
Json to_json(const CounterReport& report);

// Standard file layout: config echo, report payload, schema version.
Json report_envelope(Json config, Json report);

// Header row plus one line per report; LF line endings.
std::string bound_table_csv(const std::vector<BoundReport>& rows);

void write_text_file(const std::string& path, const std::string& content);

} // namespace qswitch::io
