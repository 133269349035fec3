#include "uuvnav/sensors.hpp"

#include <cmath>

namespace uuvnav {

namespace {

double draw_normal(Rng& rng, double sigma) {
  if (sigma <= 0) return 0.0;
  std::normal_distribution<double> dist(0.0, sigma);
  return dist(rng);
}

Eigen::Vector3d draw_normal3(Rng& rng, double sigma) {
  return {draw_normal(rng, sigma), draw_normal(rng, sigma),
          draw_normal(rng, sigma)};
}

double variance_floor(double sigma) {
  return std::max(sigma * sigma, kMinMeasurementVariance);
}

}  // namespace

BiasState init_bias(const ImuParams& p, Rng& rng) {
  BiasState b;
  b.gyro_bias = draw_normal3(rng, p.gyro_turn_on_bias_sigma);
  b.accel_bias = draw_normal3(rng, p.accel_turn_on_bias_sigma);
  return b;
}

BiasState step_bias(const BiasState& b, const ImuParams& p, double dt,
                    Rng& rng) {
  if (dt <= 0) throw std::invalid_argument("step_bias: dt must be > 0");
  BiasState out;
  const double sq_dt = std::sqrt(dt);
  out.gyro_bias = std::exp(-dt / p.gyro_bias_corr_time) * b.gyro_bias +
                  draw_normal3(rng, p.gyro_random_walk * sq_dt);
  out.accel_bias = std::exp(-dt / p.accel_bias_corr_time) * b.accel_bias +
                   draw_normal3(rng, p.accel_random_walk * sq_dt);
  return out;
}

Measurement sample_imu(const StateVector& truth, const BiasState& b,
                       const ImuParams& p, double dt, double t, Rng& rng) {
  if (dt <= 0) throw std::invalid_argument("sample_imu: dt must be > 0");
  const double gyro_sigma = p.gyro_noise_density / std::sqrt(dt);
  const double accel_sigma = p.accel_noise_density / std::sqrt(dt);

  Measurement z;
  z.time = t;
  z.sensor_id = "imu";
  z.mask = {idx::Roll, idx::Pitch, idx::Yaw, idx::Wx, idx::Wy, idx::Wz,
            idx::Ax, idx::Ay, idx::Az};
  z.angular = {true, true, true, false, false, false, false, false, false};
  z.values.resize(9);

  const Eigen::Vector3d rpy = truth.rpy() +
                              draw_normal3(rng, p.orientation_noise_sigma);
  const Eigen::Vector3d w = truth.angular_velocity() + b.gyro_bias +
                            draw_normal3(rng, gyro_sigma);
  const Eigen::Vector3d a = truth.acceleration() + b.accel_bias +
                            draw_normal3(rng, accel_sigma);
  for (int i = 0; i < 3; ++i) {
    z.values[i] = wrap_angle(rpy[i]);
    z.values[3 + i] = w[i];
    z.values[6 + i] = a[i];
  }

  z.covariance = Eigen::MatrixXd::Zero(9, 9);
  for (int i = 0; i < 3; ++i) {
    z.covariance(i, i) = variance_floor(p.orientation_noise_sigma);
    z.covariance(3 + i, 3 + i) = variance_floor(gyro_sigma);
    z.covariance(6 + i, 6 + i) = variance_floor(accel_sigma);
  }
  return z;
}

Measurement sample_dvl(const StateVector& truth, const DvlParams& p, double t,
                       Rng& rng) {
  Measurement z;
  z.time = t;
  z.sensor_id = "dvl";
  z.mask = {idx::Vx, idx::Vy, idx::Vz};
  z.angular = {false, false, false};
  z.values = truth.velocity() + draw_normal3(rng, p.noise_sigma);
  z.covariance =
      variance_floor(p.noise_sigma) * Eigen::MatrixXd::Identity(3, 3);
  return z;
}

double pressure_from_depth(double depth, const PressureParams& p) {
  return p.standard_pressure + p.kpa_per_m * depth;
}

double depth_from_pressure(double pressure, const PressureParams& p) {
  return (pressure - p.standard_pressure) / p.kpa_per_m;
}

Measurement sample_pressure(const StateVector& truth, const PressureParams& p,
                            double t, Rng& rng) {
  // Depth is -z in the z-up world frame.
  const double depth = -truth.position().z();
  const double pressure =
      pressure_from_depth(depth, p) + draw_normal(rng, p.noise_sigma);

  Measurement z;
  z.time = t;
  z.sensor_id = "pressure";
  z.mask = {idx::Z};
  z.angular = {false};
  z.values.resize(1);
  z.values[0] = -depth_from_pressure(pressure, p);
  z.covariance.resize(1, 1);
  z.covariance(0, 0) = variance_floor(p.noise_sigma / p.kpa_per_m);
  return z;
}

std::pair<Measurement, StuckState> sample_usbl(const StateVector& truth,
                                               const StuckState& st,
                                               const UsblParams& p, double t,
                                               Rng& rng) {
  Measurement z;
  z.time = t;
  z.sensor_id = "usbl";
  z.mask = {idx::X, idx::Y, idx::Z};
  z.angular = {false, false, false};
  z.covariance =
      variance_floor(p.noise_sigma) * Eigen::MatrixXd::Identity(3, 3);

  if (st.stuck_until && t < *st.stuck_until) {
    z.values = *st.held_value;
    return {z, st};
  }

  const Eigen::Vector3d fresh =
      truth.position() + draw_normal3(rng, p.noise_sigma);
  z.values = fresh;

  StuckState next;  // clear any expired window
  std::bernoulli_distribution onset(p.stuck_probability);
  if (p.stuck_probability > 0 && onset(rng)) {
    next.stuck_until = t + p.stuck_duration;
    next.held_value = fresh;
  }
  return {z, next};
}

Measurement sample_surface_fix(const StateVector& truth,
                               const SurfaceFixParams& p, double t, Rng& rng) {
  Measurement z;
  z.time = t;
  z.sensor_id = "surface_fix";
  z.mask = {idx::X, idx::Y, idx::Z};
  z.angular = {false, false, false};
  z.values = truth.position() + draw_normal3(rng, p.noise_sigma);
  z.covariance =
      variance_floor(p.noise_sigma) * Eigen::MatrixXd::Identity(3, 3);
  return z;
}

}  // namespace uuvnav
