#include "uuvnav/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uuvnav {

RunMetrics mse_per_axis(const RunLog& log) {
  if (log.ticks() == 0) throw std::invalid_argument("mse_per_axis: empty log");

  std::array<double, 6> acc{};
  for (size_t k = 0; k < log.ticks(); ++k) {
    const Vec15& truth = log.truth[k].raw;
    const Vec15& est = log.estimate[k].raw;
    for (int i = 0; i < 6; ++i) {
      const double e = is_angle_index(i) ? angle_diff(est[i], truth[i])
                                         : est[i] - truth[i];
      acc[static_cast<size_t>(i)] += e * e;
    }
  }
  const double n = static_cast<double>(log.ticks());
  RunMetrics m;
  m.mse_x = acc[0] / n;
  m.mse_y = acc[1] / n;
  m.mse_z = acc[2] / n;
  m.mse_roll = acc[3] / n;
  m.mse_pitch = acc[4] / n;
  m.mse_yaw = acc[5] / n;
  m.samples = log.ticks();
  return m;
}

double average_position_nees(const RunLog& log) {
  if (log.ticks() == 0) {
    throw std::invalid_argument("average_position_nees: empty log");
  }
  double acc = 0.0;
  for (size_t k = 0; k < log.ticks(); ++k) {
    const Eigen::Vector3d e =
        log.truth[k].position() - log.estimate[k].position();
    acc += e.dot(log.position_cov[k].ldlt().solve(e));
  }
  return acc / static_cast<double>(log.ticks());
}

namespace {

RunMetrics combine(const std::vector<RunMetrics>& ms,
                   double (*pick)(double, double), double init) {
  RunMetrics out;
  std::array<double, 6> acc;
  acc.fill(init);
  for (const auto& m : ms) {
    const auto a = m.as_array();
    for (size_t i = 0; i < 6; ++i) acc[i] = pick(acc[i], a[i]);
  }
  out.mse_x = acc[0];
  out.mse_y = acc[1];
  out.mse_z = acc[2];
  out.mse_roll = acc[3];
  out.mse_pitch = acc[4];
  out.mse_yaw = acc[5];
  out.samples = ms.empty() ? 0 : ms.front().samples;
  return out;
}

RunMetrics mean_of(const std::vector<RunMetrics>& ms) {
  RunMetrics sum =
      combine(ms, [](double a, double b) { return a + b; }, 0.0);
  const double n = std::max<size_t>(ms.size(), 1);
  sum.mse_x /= n;
  sum.mse_y /= n;
  sum.mse_z /= n;
  sum.mse_roll /= n;
  sum.mse_pitch /= n;
  sum.mse_yaw /= n;
  return sum;
}

}  // namespace

ComparisonReport run_comparison(const std::vector<LabeledConfig>& configs,
                                const std::vector<std::uint64_t>& seeds,
                                bool parallel) {
  if (configs.empty() || seeds.empty()) {
    throw std::invalid_argument("run_comparison: need >= 1 config and seed");
  }

  ComparisonReport report;
  report.seeds = seeds;

  auto run_cell = [](ScenarioConfig cfg, std::uint64_t seed,
                     const std::string& label) {
    cfg.seed = seed;
    try {
      return mse_per_axis(run_scenario(cfg));
    } catch (const std::exception& ex) {
      throw std::runtime_error("scenario '" + label + "': " + ex.what());
    }
  };

  for (const auto& lc : configs) {
    ComparisonReport::Row row;
    row.label = lc.label;
    if (parallel) {
      std::vector<std::future<RunMetrics>> futures;
      futures.reserve(seeds.size());
      for (auto seed : seeds) {
        futures.push_back(std::async(std::launch::async, run_cell, lc.config,
                                     seed, lc.label));
      }
      for (auto& f : futures) row.per_seed.push_back(f.get());
    } else {
      for (auto seed : seeds) {
        row.per_seed.push_back(run_cell(lc.config, seed, lc.label));
      }
    }
    row.mean = mean_of(row.per_seed);
    row.min = combine(
        row.per_seed, [](double a, double b) { return std::min(a, b); },
        std::numeric_limits<double>::infinity());
    row.max = combine(
        row.per_seed, [](double a, double b) { return std::max(a, b); },
        -std::numeric_limits<double>::infinity());
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string ComparisonReport::to_table() const {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(5);
  os << "Scenario                       X(m)         Y(m)         Z(m)      "
        "   Roll(rad)    Pitch(rad)   Yaw(rad)\n";
  for (const auto& row : rows) {
    std::string label = row.label;
    label.resize(28, ' ');
    os << label;
    for (double v : row.mean.as_array()) os << "  " << v;
    os << "\n";
  }
  return os.str();
}

std::string ComparisonReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "scenario,statistic,mse_x,mse_y,mse_z,mse_roll,mse_pitch,mse_yaw\n";
  auto line = [&os](const std::string& label, const std::string& stat,
                    const RunMetrics& m) {
    os << label << "," << stat;
    for (double v : m.as_array()) os << "," << v;
    os << "\n";
  };
  for (const auto& row : rows) {
    line(row.label, "mean", row.mean);
    line(row.label, "min", row.min);
    line(row.label, "max", row.max);
    for (size_t i = 0; i < row.per_seed.size(); ++i) {
      line(row.label, "seed_" + std::to_string(seeds[i]), row.per_seed[i]);
    }
  }
  return os.str();
}

}  // namespace uuvnav
