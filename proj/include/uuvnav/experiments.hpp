#pragma once

#include <string>
#include <vector>

#include "uuvnav/metrics.hpp"

namespace uuvnav {

/// Canned sensor-configuration sweep: IMU, IMU+USBL, IMU+DVL,
/// IMU+DVL+USBL, each with the pressure depth sensor.
std::vector<LabeledConfig> table2_configs(const ScenarioConfig& base);

/// IMU+USBL with surface-fix periods {none, 1, 5, 10} s.
std::vector<LabeledConfig> table3_configs(const ScenarioConfig& base);

/// IMU only versus IMU with 30 s surface fixes.
std::vector<LabeledConfig> table4_configs(const ScenarioConfig& base);

std::vector<LabeledConfig> experiment_configs(const std::string& table,
                                              const ScenarioConfig& base);

}  // namespace uuvnav
