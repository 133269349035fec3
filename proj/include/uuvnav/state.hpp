#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace uuvnav {

inline constexpr int kStateDim = 15;

using Vec15 = Eigen::Matrix<double, kStateDim, 1>;
using Mat15 = Eigen::Matrix<double, kStateDim, kStateDim>;

// State ordering: [x y z roll pitch yaw vx vy vz wx wy wz ax ay az].
// Position is world frame (z-up); velocity, angular rate and acceleration
// are body frame.
namespace idx {
enum : int {
  X = 0,
  Y,
  Z,
  Roll,
  Pitch,
  Yaw,
  Vx,
  Vy,
  Vz,
  Wx,
  Wy,
  Wz,
  Ax,
  Ay,
  Az
};
}  // namespace idx

/// Thrown when the Euler-rate transform degenerates (|pitch| within
/// 1e-6 of pi/2).
class GimbalLockError : public std::domain_error {
 public:
  explicit GimbalLockError(double pitch)
      : std::domain_error("euler-rate transform singular: pitch " +
                          std::to_string(pitch) + " is within 1e-6 of pi/2") {}
};

struct StateVector {
  Vec15 raw = Vec15::Zero();

  Eigen::Vector3d position() const { return raw.segment<3>(idx::X); }
  Eigen::Vector3d rpy() const { return raw.segment<3>(idx::Roll); }
  Eigen::Vector3d velocity() const { return raw.segment<3>(idx::Vx); }
  Eigen::Vector3d angular_velocity() const { return raw.segment<3>(idx::Wx); }
  Eigen::Vector3d acceleration() const { return raw.segment<3>(idx::Ax); }

  void set_position(const Eigen::Vector3d& p) { raw.segment<3>(idx::X) = p; }
  void set_rpy(const Eigen::Vector3d& e) { raw.segment<3>(idx::Roll) = e; }
  void set_velocity(const Eigen::Vector3d& v) { raw.segment<3>(idx::Vx) = v; }
  void set_angular_velocity(const Eigen::Vector3d& w) {
    raw.segment<3>(idx::Wx) = w;
  }
  void set_acceleration(const Eigen::Vector3d& a) {
    raw.segment<3>(idx::Ax) = a;
  }
};

/// Wraps an angle to (-pi, pi].
double wrap_angle(double a);

/// Signed shortest-arc difference a - b, in (-pi, pi].
double angle_diff(double a, double b);

/// True for the angular state fields (roll, pitch, yaw).
inline bool is_angle_index(int i) {
  return i >= idx::Roll && i <= idx::Yaw;
}

/// Body-to-world rotation, R = Rz(yaw) * Ry(pitch) * Rx(roll).
Eigen::Matrix3d rotation_from_euler(const Eigen::Vector3d& rpy);

/// Transform from body angular velocity to Euler angle rates.
/// Throws GimbalLockError when |pitch| is within 1e-6 of pi/2.
Eigen::Matrix3d euler_rate_matrix(const Eigen::Vector3d& rpy);

/// One step of the 3D rigid-body kinematic model:
///   position += R(rpy) * (v*dt + 0.5*a*dt^2)
///   rpy      += E(rpy) * w * dt          (then wrapped)
///   v        += a*dt
/// Angular velocity and acceleration are held constant.
StateVector propagate_state(const StateVector& s, double dt);

/// Jacobian of propagate_state with respect to the state, 15x15.
Mat15 transition_jacobian(const StateVector& s, double dt);

}  // namespace uuvnav
