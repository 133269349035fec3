#include "uuvnav/output.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uuvnav {

namespace fs = std::filesystem;

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<size_t>(n));
}

namespace {

const std::array<const char*, 6> kPoseNames = {"x",    "y",     "z",
                                               "roll", "pitch", "yaw"};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  out << content;
}

}  // namespace

std::string run_log_csv(const RunLog& log) {
  std::ostringstream os;
  os << "t";
  for (const char* n : kPoseNames) os << ",truth_" << n;
  for (const char* n : kPoseNames) os << ",est_" << n;
  for (int i = 0; i < kStateDim; ++i) os << ",cov_" << i;
  os << "\n";
  for (size_t k = 0; k < log.ticks(); ++k) {
    os << format_number(log.times[k]);
    for (int i = 0; i < 6; ++i) os << "," << format_number(log.truth[k].raw[i]);
    for (int i = 0; i < 6; ++i) {
      os << "," << format_number(log.estimate[k].raw[i]);
    }
    for (int i = 0; i < kStateDim; ++i) {
      os << "," << format_number(log.cov_diag[k][i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string measurements_csv(const RunLog& log) {
  std::ostringstream os;
  os << "t,sensor,accepted,mask,values\n";
  for (const auto& lm : log.measurements) {
    os << format_number(lm.z.time) << "," << lm.z.sensor_id << ","
       << (lm.accepted ? 1 : 0) << ",";
    for (int i = 0; i < lm.z.size(); ++i) {
      if (i) os << ";";
      os << lm.z.mask[static_cast<size_t>(i)];
    }
    os << ",";
    for (int i = 0; i < lm.z.size(); ++i) {
      if (i) os << ";";
      os << format_number(lm.z.values[i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string metrics_csv(const RunMetrics& m) {
  std::ostringstream os;
  os << "mse_x,mse_y,mse_z,mse_roll,mse_pitch,mse_yaw,samples\n";
  const auto a = m.as_array();
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << format_number(a[i]);
  }
  os << "," << m.samples << "\n";
  return os.str();
}

std::string plot_series_csv(const RunLog& log, int field) {
  std::ostringstream os;
  os << "t,truth,estimate\n";
  for (size_t k = 0; k < log.ticks(); ++k) {
    os << format_number(log.times[k]) << ","
       << format_number(log.truth[k].raw[field]) << ","
       << format_number(log.estimate[k].raw[field]) << "\n";
  }
  return os.str();
}

namespace {

void prepare_dir(const fs::path& dir, bool force) {
  if (fs::exists(dir) && !fs::is_empty(dir) && !force) {
    throw std::runtime_error("output directory '" + dir.string() +
                             "' exists; pass --force to overwrite");
  }
  fs::create_directories(dir);
}

}  // namespace

void write_output_bundle(const fs::path& dir, const ScenarioConfig& cfg,
                         const RunLog& log, const RunMetrics& metrics,
                         bool force) {
  prepare_dir(dir, force);
  fs::create_directories(dir / "plots");

  write_file(dir / "config.json", config_to_json(cfg).dump(2) + "\n");
  write_file(dir / "run_log.csv", run_log_csv(log));
  write_file(dir / "measurements.csv", measurements_csv(log));
  write_file(dir / "metrics.csv", metrics_csv(metrics));
  for (int i = 0; i < 6; ++i) {
    write_file(dir / "plots" / (std::string(kPoseNames[i]) + ".csv"),
               plot_series_csv(log, i));
  }
}

void write_comparison(const fs::path& dir, const ComparisonReport& report,
                      bool force) {
  prepare_dir(dir, force);
  write_file(dir / "comparison.csv", report.to_csv());
  write_file(dir / "comparison.txt", report.to_table());
}

}  // namespace uuvnav
