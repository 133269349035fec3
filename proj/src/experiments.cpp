#include "uuvnav/experiments.hpp"

#include <stdexcept>

namespace uuvnav {

namespace {

ScenarioConfig with_sensors(ScenarioConfig cfg, std::set<SensorKind> sensors) {
  cfg.sensors = std::move(sensors);
  return cfg;
}

ScenarioConfig with_surface(ScenarioConfig cfg, double period) {
  cfg.sensors.insert(SensorKind::SurfaceFix);
  cfg.surface_fix.period = period;
  return cfg;
}

}  // namespace

std::vector<LabeledConfig> table2_configs(const ScenarioConfig& base) {
  using K = SensorKind;
  return {
      {"IMU", with_sensors(base, {K::Imu, K::Pressure})},
      {"IMU+USBL", with_sensors(base, {K::Imu, K::Usbl, K::Pressure})},
      {"IMU+DVL", with_sensors(base, {K::Imu, K::Dvl, K::Pressure})},
      {"IMU+DVL+USBL",
       with_sensors(base, {K::Imu, K::Dvl, K::Usbl, K::Pressure})},
  };
}

std::vector<LabeledConfig> table3_configs(const ScenarioConfig& base) {
  using K = SensorKind;
  const ScenarioConfig imu_usbl =
      with_sensors(base, {K::Imu, K::Usbl, K::Pressure});
  return {
      {"no feedback", imu_usbl},
      {"1 sec", with_surface(imu_usbl, 1.0)},
      {"5 sec", with_surface(imu_usbl, 5.0)},
      {"10 sec", with_surface(imu_usbl, 10.0)},
  };
}

std::vector<LabeledConfig> table4_configs(const ScenarioConfig& base) {
  using K = SensorKind;
  const ScenarioConfig imu_only = with_sensors(base, {K::Imu, K::Pressure});
  return {
      {"IMU only", imu_only},
      {"30 sec", with_surface(imu_only, 30.0)},
  };
}

std::vector<LabeledConfig> experiment_configs(const std::string& table,
                                              const ScenarioConfig& base) {
  if (table == "T2") return table2_configs(base);
  if (table == "T3") return table3_configs(base);
  if (table == "T4") return table4_configs(base);
  throw std::invalid_argument("unknown experiment table '" + table +
                              "' (expected T2, T3 or T4)");
}

}  // namespace uuvnav
