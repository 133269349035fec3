#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "uuvnav/scenario.hpp"

namespace uuvnav {

/// Per-axis mean squared pose error of one run.
struct RunMetrics {
  double mse_x = 0, mse_y = 0, mse_z = 0;
  double mse_roll = 0, mse_pitch = 0, mse_yaw = 0;
  std::size_t samples = 0;

  std::array<double, 6> as_array() const {
    return {mse_x, mse_y, mse_z, mse_roll, mse_pitch, mse_yaw};
  }
};

/// MSE over every filter tick; angular errors are shortest-arc.
RunMetrics mse_per_axis(const RunLog& log);

/// Time-averaged NEES of the position block (truth minus estimate
/// against the 3x3 position covariance).
double average_position_nees(const RunLog& log);

struct ComparisonReport {
  struct Row {
    std::string label;
    std::vector<RunMetrics> per_seed;  // one entry per seed, seed order
    RunMetrics mean, min, max;
  };
  std::vector<std::uint64_t> seeds;
  std::vector<Row> rows;

  /// Aligned-text table, one row per scenario, columns X..Yaw.
  std::string to_table() const;
  /// CSV with one line per (scenario, statistic) cell group.
  std::string to_csv() const;
};

struct LabeledConfig {
  std::string label;
  ScenarioConfig config;
};

/// Runs every config under every seed (the seed overrides the config's
/// own) and aggregates per-axis MSE.
ComparisonReport run_comparison(const std::vector<LabeledConfig>& configs,
                                const std::vector<std::uint64_t>& seeds,
                                bool parallel = false);

}  // namespace uuvnav
