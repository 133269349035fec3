#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "uuvnav/state.hpp"

namespace uuvnav {

struct Waypoint {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double speed = 0.5;  // m/s, cruise speed on the edge leaving this corner
};

/// Uniformly sampled ground truth. Samples are right-continuous: the
/// state at times[k] holds over [times[k], times[k]+dt).
struct Trajectory {
  double dt = 0.05;
  std::vector<double> times;
  std::vector<StateVector> samples;

  double duration() const { return times.empty() ? 0.0 : times.back(); }

  /// Truth at tick time t (clamped to the final sample beyond the end,
  /// with motion states zeroed so the vehicle holds station).
  StateVector at_time(double t) const;
};

/// Geometry of the default scripted survey loop.
struct RectangleSpec {
  double width = 20.0;   // m, first edge length
  double height = 10.0;  // m, second edge length
  double speed = 0.5;    // m/s cruise
  double depth = 5.0;    // m below the surface (z = -depth)
  double hold = 1.0;     // s pause at each corner
  double accel = 0.25;       // m/s^2 along-track ramp
  double turn_rate = 0.5;    // rad/s at corners
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();

  std::array<Waypoint, 4> corners() const;
};

/// Constant-depth loop through the four corners, returning to the start.
/// Heading follows the direction of travel, with turn-in-place at
/// corners and a trapezoidal speed profile per edge. All phase
/// durations land on the dt grid, so each sample's velocity and
/// acceleration are exact over the following tick.
Trajectory build_rectangle_trajectory(const std::array<Waypoint, 4>& corners,
                                      double depth, double dt,
                                      double hold = 1.0, double accel = 0.25,
                                      double turn_rate = 0.5);

inline Trajectory build_rectangle_trajectory(const RectangleSpec& spec,
                                             double dt) {
  return build_rectangle_trajectory(spec.corners(), spec.depth, dt, spec.hold,
                                    spec.accel, spec.turn_rate);
}

}  // namespace uuvnav
