#include "uuvnav/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace uuvnav {

namespace {

bool divides_rate(double sensor_rate, double filter_rate) {
  if (sensor_rate <= 0) return false;
  const double ratio = filter_rate / sensor_rate;
  return std::abs(ratio - std::round(ratio)) < 1e-9 && ratio >= 1.0 - 1e-9;
}

bool due(double t, double period) {
  // Fires at t = period, 2*period, ... (not at t = 0, where the filter
  // starts at ground truth anyway).
  if (t < period - 1e-9) return false;
  const double k = t / period;
  return std::abs(k - std::round(k)) < 1e-6;
}

Rng make_rng(std::uint64_t seed, std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), stream};
  return Rng(seq);
}

}  // namespace

std::string to_string(SensorKind k) {
  switch (k) {
    case SensorKind::Imu: return "imu";
    case SensorKind::Dvl: return "dvl";
    case SensorKind::Usbl: return "usbl";
    case SensorKind::Pressure: return "pressure";
    case SensorKind::SurfaceFix: return "surface_fix";
  }
  return "?";
}

void ScenarioConfig::validate() const {
  if (filter_rate <= 0) {
    throw std::invalid_argument("filter.rate: must be > 0");
  }
  if (duration <= 0) {
    throw std::invalid_argument("experiment.duration: must be > 0");
  }
  auto check_rate = [&](SensorKind k, double rate, const char* key) {
    if (has(k) && !divides_rate(rate, filter_rate)) {
      throw std::invalid_argument(std::string(key) +
                                  ": must be > 0 and divide the filter rate");
    }
  };
  check_rate(SensorKind::Imu, imu_rate, "imu.rate");
  check_rate(SensorKind::Dvl, dvl_rate, "dvl.rate");
  check_rate(SensorKind::Pressure, pressure_rate, "pressure.rate");
  check_rate(SensorKind::Usbl, usbl_rate, "usbl.rate");
  if (has(SensorKind::SurfaceFix)) {
    const double dt = 1.0 / filter_rate;
    const double k = surface_fix.period / dt;
    if (surface_fix.period <= 0 || std::abs(k - std::round(k)) > 1e-9) {
      throw std::invalid_argument(
          "surface_fix.Period: must be a positive multiple of the filter step");
    }
  }

  auto nonneg = [](double v, const char* key) {
    if (v < 0) throw std::invalid_argument(std::string(key) + ": must be >= 0");
  };
  nonneg(imu.gyro_noise_density, "imu.Gyroscope noise density");
  nonneg(imu.gyro_random_walk, "imu.Gyroscope random walk");
  nonneg(imu.gyro_turn_on_bias_sigma, "imu.Gyroscope turn on bias sigma");
  nonneg(imu.accel_noise_density, "imu.Accelerometer noise density");
  nonneg(imu.accel_random_walk, "imu.Accelerometer random walk");
  nonneg(imu.accel_turn_on_bias_sigma, "imu.Accelerometer turn on bias sigma");
  nonneg(imu.orientation_noise_sigma, "imu.Orientation noise sigma");
  if (imu.gyro_bias_corr_time <= 0) {
    throw std::invalid_argument("imu.Gyroscope bias correlation time: must be > 0");
  }
  if (imu.accel_bias_corr_time <= 0) {
    throw std::invalid_argument(
        "imu.Accelerometer bias correlation time: must be > 0");
  }
  nonneg(dvl.noise_sigma, "dvl.Noise sigma");
  nonneg(pressure.noise_sigma, "pressure.Noise sigma");
  if (pressure.kpa_per_m <= 0) {
    throw std::invalid_argument("pressure.kPaPerM: must be > 0");
  }
  nonneg(usbl.noise_sigma, "usbl.Noise sigma");
  if (usbl.stuck_probability < 0 || usbl.stuck_probability > 1) {
    throw std::invalid_argument("usbl.Stuck probability: must be in [0, 1]");
  }
  nonneg(usbl.stuck_duration, "usbl.Stuck duration");
  nonneg(surface_fix.noise_sigma, "surface_fix.Noise sigma");
  if ((process_noise.diag.array() < 0).any()) {
    throw std::invalid_argument("filter.q_diagonal: entries must be >= 0");
  }
  if ((p0_diag.array() < 0).any()) {
    throw std::invalid_argument("filter.p0_diagonal: entries must be >= 0");
  }
  if (gate.enabled && gate.threshold <= 0) {
    throw std::invalid_argument("filter.gate_threshold: must be > 0");
  }
}

RunLog run_scenario(const ScenarioConfig& cfg) {
  cfg.validate();

  const double dt = 1.0 / cfg.filter_rate;
  const Trajectory traj = build_rectangle_trajectory(cfg.trajectory, dt);
  const long n_ticks = std::lround(cfg.duration * cfg.filter_rate);

  Rng imu_rng = make_rng(cfg.seed, 1);
  Rng dvl_rng = make_rng(cfg.seed, 2);
  Rng pressure_rng = make_rng(cfg.seed, 3);
  Rng usbl_rng = make_rng(cfg.seed, 4);
  Rng surface_rng = make_rng(cfg.seed, 5);

  BiasState bias;
  if (cfg.has(SensorKind::Imu)) bias = init_bias(cfg.imu, imu_rng);
  StuckState stuck;

  const double imu_period = 1.0 / cfg.imu_rate;
  const double dvl_period = 1.0 / cfg.dvl_rate;
  const double pressure_period = 1.0 / cfg.pressure_rate;
  const double usbl_period = 1.0 / cfg.usbl_rate;

  FilterState fs =
      init_filter(traj.at_time(0.0), cfg.p0_diag.asDiagonal(), 0.0);

  RunLog log;
  log.dt = dt;
  auto record_tick = [&](double t, const StateVector& truth) {
    log.times.push_back(t);
    log.truth.push_back(truth);
    log.estimate.push_back(fs.estimate);
    log.cov_diag.push_back(fs.covariance.diagonal());
    log.position_cov.push_back(fs.covariance.block<3, 3>(idx::X, idx::X));
  };
  record_tick(0.0, traj.at_time(0.0));

  const GateConfig no_gate{};

  for (long k = 1; k <= n_ticks; ++k) {
    const double t = k * dt;
    const StateVector truth = traj.at_time(t);

    fs = predict(fs, dt, cfg.process_noise);

    auto apply = [&](const Measurement& z, const GateConfig& gate) {
      auto [next, accepted] = correct(fs, z, gate);
      fs = next;
      log.measurements.push_back({z, accepted});
    };

    if (cfg.has(SensorKind::Imu) && due(t, imu_period)) {
      bias = step_bias(bias, cfg.imu, imu_period, imu_rng);
      apply(sample_imu(truth, bias, cfg.imu, imu_period, t, imu_rng), no_gate);
    }
    if (cfg.has(SensorKind::Dvl) && due(t, dvl_period)) {
      apply(sample_dvl(truth, cfg.dvl, t, dvl_rng), no_gate);
    }
    if (cfg.has(SensorKind::Pressure) && due(t, pressure_period)) {
      apply(sample_pressure(truth, cfg.pressure, t, pressure_rng), no_gate);
    }
    if (cfg.has(SensorKind::Usbl) && due(t, usbl_period)) {
      auto [z, next_stuck] = sample_usbl(truth, stuck, cfg.usbl, t, usbl_rng);
      stuck = next_stuck;
      apply(z, cfg.gate);  // gating targets the stuck-fault sensor
    }
    if (cfg.has(SensorKind::SurfaceFix) && due(t, cfg.surface_fix.period)) {
      apply(sample_surface_fix(truth, cfg.surface_fix, t, surface_rng),
            no_gate);
    }

    record_tick(t, truth);
  }

  return log;
}

}  // namespace uuvnav
