#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "uuvnav/state.hpp"

namespace uuvnav {

/// Filter estimate, covariance, and the time they refer to.
struct FilterState {
  StateVector estimate;
  Mat15 covariance = Mat15::Identity();
  double time = 0.0;
};

/// A timestamped partial observation of the state. `mask` lists the state
/// fields observed, in the order of `values`; H is the corresponding
/// selection matrix. `angular` marks components that live on the circle.
struct Measurement {
  double time = 0.0;
  std::string sensor_id;
  Eigen::VectorXd values;
  Eigen::MatrixXd covariance;
  std::vector<int> mask;
  std::vector<bool> angular;

  int size() const { return static_cast<int>(mask.size()); }
};

struct ProcessNoise {
  Vec15 diag = Vec15::Zero();

  /// Default process noise diagonal:
  /// [1e-3 1e-3 1e-3 0.3 0.3 0.3 0.5 0.5 0.1 0.3 0.3 0.3 0.3 0.3 0.3].
  static ProcessNoise standard();
};

/// Mahalanobis innovation gate. Disabled by default; 13.8 is the
/// chi-square 99.7% point for 3 dof.
struct GateConfig {
  bool enabled = false;
  double threshold = 13.8;
};

/// Validates P0 (symmetric, PSD) and assembles the initial filter state.
FilterState init_filter(const StateVector& x0, const Mat15& p0, double t0);

/// Time update: estimate through propagate_state, covariance through
/// A P A^T + Q*dt, re-symmetrized.
FilterState predict(const FilterState& fs, double dt, const ProcessNoise& q);

/// Measurement update. Innovations on angular components use the
/// shortest-arc difference. Returns the posterior and whether the
/// measurement was accepted (false only when gating rejects it).
std::pair<FilterState, bool> correct(const FilterState& fs,
                                     const Measurement& z,
                                     const GateConfig& gate = {});

/// Textbook linear Kalman predict+correct, used as the EKF oracle.
/// x <- A x + B u;  P <- A P A^T + Q;  then the standard gain update
/// with measurement y, model H, noise R.
void linear_kf_step(Eigen::VectorXd& x, Eigen::MatrixXd& p,
                    const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                    const Eigen::VectorXd& u, const Eigen::MatrixXd& q,
                    const Eigen::VectorXd& y, const Eigen::MatrixXd& h,
                    const Eigen::MatrixXd& r);

}  // namespace uuvnav
