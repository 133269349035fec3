#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uuvnav/scenario.hpp"

namespace uuvnav {

using Json = nlohmann::ordered_json;

/// Serializes a scenario to the config-file schema. Sensor parameter
/// keys use the simulator's parameter-table names verbatim
/// ("Gyroscope noise density", "kPaPerM", ...).
Json config_to_json(const ScenarioConfig& cfg);

/// Parses a config document. Unknown keys are rejected with an error
/// naming the key; value errors name the offending key.
ScenarioConfig config_from_json(const Json& doc);

/// Applies one "section.key=value" override in place.
void apply_override(Json& doc, const std::string& spec);

/// Reads, overrides, parses, and validates a config file.
ScenarioConfig load_config(const std::filesystem::path& path,
                           const std::vector<std::string>& overrides = {});

ScenarioConfig parse_config(const Json& doc,
                            const std::vector<std::string>& overrides = {});

}  // namespace uuvnav
