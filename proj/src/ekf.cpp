#include "uuvnav/ekf.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace uuvnav {

namespace {

constexpr double kSymTol = 1e-9;
constexpr double kEigTol = -1e-9;
constexpr double kTimeTol = 1e-9;

void symmetrize(Mat15& p) { p = 0.5 * (p + p.transpose()).eval(); }

void validate_measurement(const FilterState& fs, const Measurement& z) {
  const int m = z.size();
  if (m == 0) throw std::invalid_argument("measurement: empty mask");
  if (z.values.size() != m || z.covariance.rows() != m ||
      z.covariance.cols() != m ||
      z.angular.size() != static_cast<size_t>(m)) {
    throw std::invalid_argument("measurement: inconsistent dimensions");
  }
  std::set<int> seen;
  for (int i : z.mask) {
    if (i < 0 || i >= kStateDim) {
      throw std::invalid_argument("measurement: mask index out of range");
    }
    if (!seen.insert(i).second) {
      throw std::invalid_argument("measurement: duplicate mask index");
    }
  }
  if ((z.covariance - z.covariance.transpose()).cwiseAbs().maxCoeff() >
      kSymTol * std::max(1.0, z.covariance.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("measurement: covariance not symmetric");
  }
  if (z.time < fs.time - kTimeTol) {
    throw std::invalid_argument(
        "measurement: out-of-order (time " + std::to_string(z.time) +
        " precedes filter time " + std::to_string(fs.time) + ")");
  }
}

}  // namespace

ProcessNoise ProcessNoise::standard() {
  ProcessNoise q;
  q.diag << 1e-3, 1e-3, 1e-3, 0.3, 0.3, 0.3, 0.5, 0.5, 0.1, 0.3, 0.3, 0.3,
      0.3, 0.3, 0.3;
  return q;
}

FilterState init_filter(const StateVector& x0, const Mat15& p0, double t0) {
  if ((p0 - p0.transpose()).cwiseAbs().maxCoeff() >
      kSymTol * std::max(1.0, p0.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("init_filter: P0 not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat15> es(p0, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < kEigTol) {
    throw std::invalid_argument("init_filter: P0 not positive semi-definite");
  }
  if (!x0.raw.allFinite()) {
    throw std::invalid_argument("init_filter: non-finite initial state");
  }
  return FilterState{x0, p0, t0};
}

FilterState predict(const FilterState& fs, double dt, const ProcessNoise& q) {
  if (dt < 0) throw std::invalid_argument("predict: dt must be >= 0");
  if ((q.diag.array() < 0).any()) {
    throw std::invalid_argument("predict: negative process noise entry");
  }
  const Mat15 a = transition_jacobian(fs.estimate, dt);
  FilterState out;
  out.estimate = propagate_state(fs.estimate, dt);
  out.covariance = a * fs.covariance * a.transpose();
  out.covariance.diagonal() += q.diag * dt;
  symmetrize(out.covariance);
  out.time = fs.time + dt;
  return out;
}

std::pair<FilterState, bool> correct(const FilterState& fs,
                                     const Measurement& z,
                                     const GateConfig& gate) {
  validate_measurement(fs, z);
  const int m = z.size();

  Eigen::VectorXd innovation(m);
  for (int i = 0; i < m; ++i) {
    const double predicted = fs.estimate.raw[z.mask[i]];
    innovation[i] = z.angular[i] ? angle_diff(z.values[i], predicted)
                                 : z.values[i] - predicted;
  }

  const Eigen::MatrixXd p_mz = fs.covariance(Eigen::all, z.mask);  // P H^T
  Eigen::MatrixXd s = fs.covariance(z.mask, z.mask) + z.covariance;
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("correct: singular innovation covariance");
  }

  if (gate.enabled) {
    if (gate.threshold <= 0) {
      throw std::invalid_argument("correct: gate threshold must be > 0");
    }
    const double d2 = innovation.dot(llt.solve(innovation));
    if (d2 > gate.threshold) return {fs, false};
  }

  const Eigen::MatrixXd k = llt.solve(p_mz.transpose()).transpose();

  FilterState out = fs;
  out.estimate.raw += k * innovation;
  for (int i = idx::Roll; i <= idx::Yaw; ++i) {
    out.estimate.raw[i] = wrap_angle(out.estimate.raw[i]);
  }
  out.covariance = fs.covariance - k * p_mz.transpose();
  symmetrize(out.covariance);
  out.time = std::max(fs.time, z.time);
  return {out, true};
}

void linear_kf_step(Eigen::VectorXd& x, Eigen::MatrixXd& p,
                    const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                    const Eigen::VectorXd& u, const Eigen::MatrixXd& q,
                    const Eigen::VectorXd& y, const Eigen::MatrixXd& h,
                    const Eigen::MatrixXd& r) {
  x = a * x + b * u;
  p = a * p * a.transpose() + q;

  Eigen::MatrixXd s = h * p * h.transpose() + r;
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  if (llt.info() != Eigen::Success) {
    throw std::runtime_error("linear_kf_step: singular innovation covariance");
  }
  const Eigen::MatrixXd k = llt.solve(h * p).transpose();
  x += k * (y - h * x);
  p = ((Eigen::MatrixXd::Identity(p.rows(), p.cols()) - k * h) * p).eval();
  p = (0.5 * (p + p.transpose())).eval();
}

}  // namespace uuvnav
