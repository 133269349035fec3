#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace uuvnav {

struct RunOptions {
  std::filesystem::path config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = "out";
  bool force = false;
};

struct ReproduceOptions {
  std::string table = "T2";  // T2, T3 or T4
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::optional<std::filesystem::path> config_path;  // base scenario
  std::vector<std::string> overrides;
  std::filesystem::path out_dir = "out";
  bool parallel = false;
  bool force = false;
};

/// Executes a scenario and writes the output bundle. Returns the
/// process exit code; failures are diagnosed on `err`.
int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err);

/// Runs one of the canned experiment tables and writes the comparison
/// report.
int cmd_reproduce(const ReproduceOptions& opt, std::ostream& out,
                  std::ostream& err);

/// Parses and validates a config file without running anything.
int cmd_validate_config(const std::filesystem::path& config_path,
                        const std::vector<std::string>& overrides,
                        std::ostream& out, std::ostream& err);

}  // namespace uuvnav
