#pragma once

// JSON and text renderings of a ThinReport.

#include <string>

#include <json.hpp>

#include "modlie/thinlie.hpp"

namespace modlie::thin {

nlohmann::json to_json(const ThinReport& report);
/// Inverse of to_json; diamond types are parsed in the field named by params.field.
ThinReport report_from_json(const nlohmann::json& j);

/// Parameter header, a `degree:type` diamond timeline and one line per check.
std::string render_text(const ThinReport& report);

}  // namespace modlie::thin
