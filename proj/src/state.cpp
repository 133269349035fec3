#include "uuvnav/state.hpp"

#include <cmath>

namespace uuvnav {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGimbalTol = 1e-6;

bool near_gimbal_lock(double pitch) {
  return std::abs(std::abs(wrap_angle(pitch)) - kPi / 2) < kGimbalTol;
}

Eigen::Matrix3d rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << 1, 0, 0, 0, c, -s, 0, s, c;
  return m;
}

Eigen::Matrix3d rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << c, 0, s, 0, 1, 0, -s, 0, c;
  return m;
}

Eigen::Matrix3d rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << c, -s, 0, s, c, 0, 0, 0, 1;
  return m;
}

Eigen::Matrix3d drot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << 0, 0, 0, 0, -s, -c, 0, c, -s;
  return m;
}

Eigen::Matrix3d drot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << -s, 0, c, 0, 0, 0, -c, 0, -s;
  return m;
}

Eigen::Matrix3d drot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d m;
  m << -s, -c, 0, c, -s, 0, 0, 0, 0;
  return m;
}

// d(E(rpy))/d(roll) where E is the Euler-rate transform.
Eigen::Matrix3d deuler_rate_droll(double roll, double pitch) {
  const double cf = std::cos(roll), sf = std::sin(roll);
  const double tt = std::tan(pitch), ct = std::cos(pitch);
  Eigen::Matrix3d m;
  m << 0, cf * tt, -sf * tt,
       0, -sf, -cf,
       0, cf / ct, -sf / ct;
  return m;
}

// d(E(rpy))/d(pitch).
Eigen::Matrix3d deuler_rate_dpitch(double roll, double pitch) {
  const double cf = std::cos(roll), sf = std::sin(roll);
  const double ct = std::cos(pitch), tt = std::tan(pitch);
  const double sec2 = 1.0 / (ct * ct);
  Eigen::Matrix3d m;
  m << 0, sf * sec2, cf * sec2,
       0, 0, 0,
       0, sf * tt / ct, cf * tt / ct;
  return m;
}

}  // namespace

double wrap_angle(double a) {
  double w = std::remainder(a, 2 * kPi);
  if (w <= -kPi) w = kPi;
  return w;
}

double angle_diff(double a, double b) { return wrap_angle(a - b); }

Eigen::Matrix3d rotation_from_euler(const Eigen::Vector3d& rpy) {
  return rot_z(rpy.z()) * rot_y(rpy.y()) * rot_x(rpy.x());
}

Eigen::Matrix3d euler_rate_matrix(const Eigen::Vector3d& rpy) {
  if (near_gimbal_lock(rpy.y())) throw GimbalLockError(rpy.y());
  const double cf = std::cos(rpy.x()), sf = std::sin(rpy.x());
  const double ct = std::cos(rpy.y()), tt = std::tan(rpy.y());
  Eigen::Matrix3d m;
  m << 1, sf * tt, cf * tt,
       0, cf, -sf,
       0, sf / ct, cf / ct;
  return m;
}

StateVector propagate_state(const StateVector& s, double dt) {
  if (dt < 0) throw std::invalid_argument("propagate_state: dt must be >= 0");
  const Eigen::Vector3d rpy = s.rpy();
  const Eigen::Matrix3d r = rotation_from_euler(rpy);
  const Eigen::Matrix3d e = euler_rate_matrix(rpy);

  StateVector out = s;
  out.set_position(s.position() +
                   r * (s.velocity() * dt + 0.5 * s.acceleration() * dt * dt));
  Eigen::Vector3d next_rpy = rpy + e * s.angular_velocity() * dt;
  for (int i = 0; i < 3; ++i) next_rpy[i] = wrap_angle(next_rpy[i]);
  out.set_rpy(next_rpy);
  out.set_velocity(s.velocity() + s.acceleration() * dt);
  return out;
}

Mat15 transition_jacobian(const StateVector& s, double dt) {
  if (dt < 0) {
    throw std::invalid_argument("transition_jacobian: dt must be >= 0");
  }
  const Eigen::Vector3d rpy = s.rpy();
  if (near_gimbal_lock(rpy.y())) throw GimbalLockError(rpy.y());

  const double roll = rpy.x(), pitch = rpy.y(), yaw = rpy.z();
  const Eigen::Matrix3d rx = rot_x(roll), ry = rot_y(pitch), rz = rot_z(yaw);
  const Eigen::Matrix3d r = rz * ry * rx;
  const Eigen::Matrix3d e = euler_rate_matrix(rpy);

  // Displacement in body frame over the step.
  const Eigen::Vector3d u = s.velocity() * dt + 0.5 * s.acceleration() * dt * dt;
  const Eigen::Vector3d w = s.angular_velocity();

  Mat15 a = Mat15::Identity();

  // d position / d orientation.
  a.block<3, 1>(idx::X, idx::Roll) = rz * ry * drot_x(roll) * u;
  a.block<3, 1>(idx::X, idx::Pitch) = rz * drot_y(pitch) * rx * u;
  a.block<3, 1>(idx::X, idx::Yaw) = drot_z(yaw) * ry * rx * u;
  // d position / d velocity, acceleration.
  a.block<3, 3>(idx::X, idx::Vx) = r * dt;
  a.block<3, 3>(idx::X, idx::Ax) = r * (0.5 * dt * dt);

  // d orientation / d orientation (E depends on roll and pitch only).
  a.block<3, 1>(idx::Roll, idx::Roll) +=
      deuler_rate_droll(roll, pitch) * w * dt;
  a.block<3, 1>(idx::Roll, idx::Pitch) +=
      deuler_rate_dpitch(roll, pitch) * w * dt;
  // d orientation / d angular velocity.
  a.block<3, 3>(idx::Roll, idx::Wx) = e * dt;

  // d velocity / d acceleration.
  a.block<3, 3>(idx::Vx, idx::Ax) = Eigen::Matrix3d::Identity() * dt;

  return a;
}

}  // namespace uuvnav
