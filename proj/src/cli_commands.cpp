#include "uuvnav/cli_commands.hpp"

#include <exception>

#include "uuvnav/config.hpp"
#include "uuvnav/experiments.hpp"
#include "uuvnav/metrics.hpp"
#include "uuvnav/output.hpp"

namespace uuvnav {

namespace {

ScenarioConfig load_or_default(const std::optional<std::filesystem::path>& path,
                               const std::vector<std::string>& overrides) {
  if (path) return load_config(*path, overrides);
  return parse_config(config_to_json(ScenarioConfig{}), overrides);
}

}  // namespace

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    ScenarioConfig cfg = load_config(opt.config_path, opt.overrides);
    if (opt.seed) {
      cfg.seed = *opt.seed;
      cfg.validate();
    }
    const RunLog log = run_scenario(cfg);
    const RunMetrics metrics = mse_per_axis(log);
    write_output_bundle(opt.out_dir, cfg, log, metrics, opt.force);
    out << "run complete: " << log.ticks() << " ticks, "
        << log.measurements.size() << " measurements\n"
        << "output written to " << opt.out_dir.string() << "\n";
    return 0;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

int cmd_reproduce(const ReproduceOptions& opt, std::ostream& out,
                  std::ostream& err) {
  try {
    const ScenarioConfig base = load_or_default(opt.config_path, opt.overrides);
    const auto configs = experiment_configs(opt.table, base);
    const ComparisonReport report =
        run_comparison(configs, opt.seeds, opt.parallel);
    write_comparison(opt.out_dir, report, opt.force);
    out << report.to_table();
    out << "report written to " << opt.out_dir.string() << "\n";
    return 0;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

int cmd_validate_config(const std::filesystem::path& config_path,
                        const std::vector<std::string>& overrides,
                        std::ostream& out, std::ostream& err) {
  try {
    load_config(config_path, overrides);
    out << "config ok: " << config_path.string() << "\n";
    return 0;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
}

}  // namespace uuvnav
