#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "uuvnav/ekf.hpp"
#include "uuvnav/sensors.hpp"
#include "uuvnav/trajectory.hpp"

namespace uuvnav {

enum class SensorKind { Imu, Dvl, Usbl, Pressure, SurfaceFix };

std::string to_string(SensorKind k);

struct ScenarioConfig {
  std::set<SensorKind> sensors = {SensorKind::Imu, SensorKind::Dvl,
                                  SensorKind::Usbl, SensorKind::Pressure};

  ImuParams imu;
  DvlParams dvl;
  UsblParams usbl;
  PressureParams pressure;
  SurfaceFixParams surface_fix;

  // Sample rates in Hz. Periodic sensor rates must divide the filter
  // rate so every sample lands on a filter tick.
  double imu_rate = 20.0;
  double dvl_rate = 10.0;
  double pressure_rate = 10.0;
  double usbl_rate = 1.0;

  double filter_rate = 20.0;
  ProcessNoise process_noise = ProcessNoise::standard();
  Vec15 p0_diag = Vec15::Constant(1e-9);
  GateConfig gate;

  RectangleSpec trajectory;

  std::uint64_t seed = 42;
  double duration = 200.0;

  bool has(SensorKind k) const { return sensors.count(k) > 0; }

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Time-aligned record of one scenario run.
struct RunLog {
  struct LoggedMeasurement {
    Measurement z;
    bool accepted = true;
  };

  double dt = 0.05;
  std::vector<double> times;
  std::vector<StateVector> truth;
  std::vector<StateVector> estimate;
  std::vector<Vec15> cov_diag;
  std::vector<Eigen::Matrix3d> position_cov;  // for consistency checks
  std::vector<LoggedMeasurement> measurements;

  size_t ticks() const { return times.size(); }
};

/// Runs the scenario loop: at each filter tick, predict, then apply
/// every sensor measurement due at that tick in a fixed sensor order.
/// Deterministic for a given config (seed included).
RunLog run_scenario(const ScenarioConfig& cfg);

}  // namespace uuvnav
