#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "zkq/laurent.hpp"
#include "zkq/series.hpp"

namespace zkq {

// All JSON output uses ordered_json so key order (and therefore the emitted
// bytes) is deterministic for identical inputs.
using ordered_json = nlohmann::ordered_json;

ordered_json json_of(const Rational& r);     // exact string, e.g. "-3/2"
ordered_json json_of(const LaurentPoly& p);  // {"expr", "terms": [{"z","u","c"}]}
ordered_json json_of(const HbarSeries& s);   // {"expr", "orders": [{"h", "terms"}]}

// Standard result wrapper: schema_version, echoed command line, payload,
// warnings (possibly empty).
ordered_json make_envelope(const std::string& command, ordered_json payload,
                           const std::vector<std::string>& warnings);

std::string render(const ordered_json& j);  // 2-space indent, trailing newline

}  // namespace zkq
