#pragma once

#include <string>

#include "json.hpp"

namespace divkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Serializes a JSON document with every floating-point number rendered at
/// 17 significant digits, so payload values round-trip 64-bit doubles exactly
/// and repeated runs produce byte-identical text.
std::string dump_report(const Json& doc, int indent = 2);

/// Envelope shared by every CLI operation. `result` carries the payload
/// (divergence value, decomposition report, or verification summary).
Json make_report_envelope(const std::string& operation, const std::string& generator_name);

} // namespace divkit
