#pragma once

#include <optional>
#include <random>
#include <utility>

#include <Eigen/Dense>

#include "uuvnav/ekf.hpp"
#include "uuvnav/state.hpp"

namespace uuvnav {

using Rng = std::mt19937_64;

// Variance floor so zero-noise configurations still yield a positive
// definite measurement covariance.
inline constexpr double kMinMeasurementVariance = 1e-12;

struct ImuParams {
  double gyro_noise_density = 3.394e-4;     // rad/s/sqrt(Hz)
  double gyro_random_walk = 3.8785e-5;      // rad/s^2/sqrt(Hz)
  double gyro_bias_corr_time = 1000.0;      // s
  double gyro_turn_on_bias_sigma = 0.0087;  // rad/s
  double accel_noise_density = 0.004;       // m/s^2/sqrt(Hz)
  double accel_random_walk = 0.006;         // m/s^3/sqrt(Hz)
  double accel_bias_corr_time = 300.0;      // s
  double accel_turn_on_bias_sigma = 0.1960; // m/s^2
  double orientation_noise_sigma = 0.005;   // rad
};

struct DvlParams {
  double noise_sigma = 0.05;    // m/s
  double noise_amplitude = 2.0; // carried, unused
};

struct PressureParams {
  double noise_sigma = 3.0;          // kPa
  double noise_amplitude = 0.0;      // carried, unused
  double standard_pressure = 101.325; // kPa
  double kpa_per_m = 9.80638;        // kPa per meter of depth
};

struct UsblParams {
  double noise_sigma = 0.5;      // m
  double stuck_probability = 0.05;
  double stuck_duration = 10.0;  // s
};

struct SurfaceFixParams {
  double noise_sigma = 0.05;  // m
  double period = 30.0;       // s
};

/// Slowly varying IMU bias, one triple per instrument.
struct BiasState {
  Eigen::Vector3d gyro_bias = Eigen::Vector3d::Zero();
  Eigen::Vector3d accel_bias = Eigen::Vector3d::Zero();
};

/// USBL stuck-fault state: while `stuck_until` is set, `held_value` is
/// repeated verbatim.
struct StuckState {
  std::optional<double> stuck_until;
  std::optional<Eigen::Vector3d> held_value;
};

/// Draws turn-on biases from N(0, turn_on_bias_sigma^2) per component.
BiasState init_bias(const ImuParams& p, Rng& rng);

/// First-order Gauss-Markov step:
///   b' = exp(-dt/tau) * b + w,  w ~ N(0, random_walk^2 * dt).
BiasState step_bias(const BiasState& b, const ImuParams& p, double dt,
                    Rng& rng);

/// IMU reading covering orientation, angular velocity, and linear
/// acceleration. White noise sigma for the rate/accel channels is
/// noise_density / sqrt(dt).
Measurement sample_imu(const StateVector& truth, const BiasState& b,
                       const ImuParams& p, double dt, double t, Rng& rng);

/// Body-frame velocity plus white noise.
Measurement sample_dvl(const StateVector& truth, const DvlParams& p, double t,
                       Rng& rng);

/// Depth from simulated absolute pressure, reported as a z measurement.
Measurement sample_pressure(const StateVector& truth, const PressureParams& p,
                            double t, Rng& rng);

double pressure_from_depth(double depth, const PressureParams& p);
double depth_from_pressure(double pressure, const PressureParams& p);

/// Position fix with the stuck fault: a fresh fix has a
/// `stuck_probability` chance of being repeated for `stuck_duration`
/// seconds.
std::pair<Measurement, StuckState> sample_usbl(const StateVector& truth,
                                               const StuckState& st,
                                               const UsblParams& p, double t,
                                               Rng& rng);

/// High-precision surface position fix.
Measurement sample_surface_fix(const StateVector& truth,
                               const SurfaceFixParams& p, double t, Rng& rng);

}  // namespace uuvnav
