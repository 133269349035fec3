#include "uuvnav/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace uuvnav {

namespace {

double snap(double t, double dt) { return std::round(t / dt) * dt; }

long ticks(double t, double dt) {
  return std::lround(t / dt);
}

struct Builder {
  double dt;
  std::vector<double> times;
  std::vector<StateVector> samples;
  long tick = 0;

  void emit(const StateVector& s) {
    times.push_back(tick * dt);
    samples.push_back(s);
    ++tick;
  }
};

}  // namespace

StateVector Trajectory::at_time(double t) const {
  if (samples.empty()) throw std::logic_error("empty trajectory");
  const long k = std::lround(t / dt);
  if (k < 0) return samples.front();
  if (k >= static_cast<long>(samples.size())) return samples.back();
  return samples[static_cast<size_t>(k)];
}

std::array<Waypoint, 4> RectangleSpec::corners() const {
  const double x0 = origin.x(), y0 = origin.y();
  const double z = -depth;
  return {Waypoint{{x0, y0, z}, speed},
          Waypoint{{x0 + width, y0, z}, speed},
          Waypoint{{x0 + width, y0 + height, z}, speed},
          Waypoint{{x0, y0 + height, z}, speed}};
}

Trajectory build_rectangle_trajectory(const std::array<Waypoint, 4>& corners,
                                      double depth, double dt, double hold,
                                      double accel, double turn_rate) {
  if (dt <= 0) throw std::invalid_argument("trajectory: dt must be > 0");
  if (accel <= 0 || turn_rate <= 0) {
    throw std::invalid_argument("trajectory: accel and turn_rate must be > 0");
  }
  for (const auto& w : corners) {
    if (w.speed <= 0) throw std::invalid_argument("trajectory: speed must be > 0");
  }

  Builder b{dt, {}, {}, 0};
  const double z = -depth;

  Eigen::Vector2d pos = corners[0].position.head<2>();
  // Initial heading along the first edge; no leading turn needed.
  Eigen::Vector2d first_dir =
      (corners[1].position.head<2>() - pos);
  if (first_dir.norm() < 1e-12) {
    throw std::invalid_argument("trajectory: degenerate rectangle edge");
  }
  double yaw = std::atan2(first_dir.y(), first_dir.x());

  auto static_state = [&](double y) {
    StateVector s;
    s.set_position({pos.x(), pos.y(), z});
    s.set_rpy({0, 0, wrap_angle(y)});
    return s;
  };

  auto emit_hold = [&](double duration) {
    const long n = ticks(snap(duration, dt), dt);
    for (long j = 0; j < n; ++j) b.emit(static_state(yaw));
  };

  auto emit_turn = [&](double target_yaw) {
    const double dyaw = angle_diff(target_yaw, yaw);
    if (std::abs(dyaw) < 1e-9) {
      yaw = target_yaw;
      return;
    }
    const double t_turn =
        std::max(dt, snap(std::abs(dyaw) / turn_rate, dt));
    const long n = ticks(t_turn, dt);
    const double rate = dyaw / t_turn;
    for (long j = 0; j < n; ++j) {
      StateVector s = static_state(yaw + rate * j * dt);
      s.set_angular_velocity({0, 0, rate});
      b.emit(s);
    }
    yaw = target_yaw;
  };

  auto emit_edge = [&](const Eigen::Vector2d& goal, double speed) {
    const Eigen::Vector2d delta = goal - pos;
    const double len = delta.norm();
    if (len < 1e-9) {
      throw std::invalid_argument("trajectory: degenerate rectangle edge");
    }
    const Eigen::Vector2d dir = delta / len;

    // Snap the ramp and cruise phases to the tick grid, then solve the
    // cruise speed so the trapezoid area equals the edge length exactly.
    const double t_ramp = std::max(dt, snap(speed / accel, dt));
    const double t_cruise =
        std::max(0.0, snap(len / speed - t_ramp, dt));
    const double v = len / (t_ramp + t_cruise);
    const double a = v / t_ramp;

    const long n = ticks(2 * t_ramp + t_cruise, dt);
    const Eigen::Vector2d start = pos;
    for (long j = 0; j < n; ++j) {
      const double tau = j * dt;
      double s, vel, acc;
      if (tau < t_ramp - dt / 2) {
        s = 0.5 * a * tau * tau;
        vel = a * tau;
        acc = a;
      } else if (tau < t_ramp + t_cruise - dt / 2) {
        s = 0.5 * v * t_ramp + v * (tau - t_ramp);
        vel = v;
        acc = 0.0;
      } else {
        const double u = tau - t_ramp - t_cruise;
        s = 0.5 * v * t_ramp + v * t_cruise + v * u - 0.5 * a * u * u;
        vel = v - a * u;
        acc = -a;
      }
      const Eigen::Vector2d p = start + dir * s;
      StateVector st;
      st.set_position({p.x(), p.y(), z});
      st.set_rpy({0, 0, wrap_angle(yaw)});
      st.set_velocity({vel, 0, 0});
      st.set_acceleration({acc, 0, 0});
      b.emit(st);
    }
    pos = goal;
  };

  for (int i = 0; i < 4; ++i) {
    const Eigen::Vector2d goal = corners[(i + 1) % 4].position.head<2>();
    const Eigen::Vector2d dir = goal - pos;
    if (dir.norm() < 1e-12) {
      throw std::invalid_argument("trajectory: degenerate rectangle edge");
    }
    emit_turn(std::atan2(dir.y(), dir.x()));
    emit_hold(hold);
    emit_edge(goal, corners[i].speed);
  }

  // Terminal sample: parked at the start corner.
  b.emit(static_state(yaw));

  Trajectory traj;
  traj.dt = dt;
  traj.times = std::move(b.times);
  traj.samples = std::move(b.samples);
  return traj;
}

}  // namespace uuvnav
