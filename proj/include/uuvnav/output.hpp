#pragma once

#include <filesystem>
#include <string>

#include "uuvnav/config.hpp"
#include "uuvnav/metrics.hpp"
#include "uuvnav/scenario.hpp"

namespace uuvnav {

/// Full-precision decimal rendering used for every numeric CSV cell, so
/// identical runs produce byte-identical files.
std::string format_number(double v);

std::string run_log_csv(const RunLog& log);
std::string measurements_csv(const RunLog& log);
std::string metrics_csv(const RunMetrics& m);

/// Per-axis truth/estimate series for plotting: t,truth,estimate.
std::string plot_series_csv(const RunLog& log, int field);

/// Writes config.json, run_log.csv, measurements.csv, metrics.csv and
/// plots/<axis>.csv under `dir`. Refuses to overwrite an existing
/// non-empty directory unless `force` is set.
void write_output_bundle(const std::filesystem::path& dir,
                         const ScenarioConfig& cfg, const RunLog& log,
                         const RunMetrics& metrics, bool force);

void write_comparison(const std::filesystem::path& dir,
                      const ComparisonReport& report, bool force);

}  // namespace uuvnav
