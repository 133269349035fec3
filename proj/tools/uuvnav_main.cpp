#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uuvnav/cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Underwater vehicle pose-estimation workbench"};
  app.require_subcommand(1);

  uuvnav::RunOptions run_opt;
  std::string run_config;
  std::uint64_t run_seed = 0;
  bool run_seed_set = false;
  auto* run = app.add_subcommand("run", "Run one scenario and write its "
                                        "output bundle");
  run->add_option("--config", run_config, "Scenario config file (JSON)")
      ->required();
  run->add_option("--override", run_opt.overrides,
                  "Config override, section.key=value (repeatable)");
  run->add_option("--seed", run_seed, "Override the experiment seed")
      ->each([&](const std::string&) { run_seed_set = true; });
  run->add_option("--out", run_opt.out_dir, "Output directory");
  run->add_flag("--force", run_opt.force, "Overwrite an existing output dir");

  uuvnav::ReproduceOptions rep_opt;
  std::string rep_config;
  auto* rep = app.add_subcommand(
      "reproduce", "Run a canned experiment table (T2, T3 or T4)");
  rep->add_option("table", rep_opt.table, "T2, T3 or T4")->required();
  rep->add_option("--seeds", rep_opt.seeds, "Seeds for the Monte Carlo sweep");
  rep->add_option("--config", rep_config,
                  "Base scenario config (defaults built in)");
  rep->add_option("--override", rep_opt.overrides,
                  "Config override, section.key=value (repeatable)");
  rep->add_option("--out", rep_opt.out_dir, "Output directory");
  rep->add_flag("--parallel", rep_opt.parallel, "Run seeds in parallel");
  rep->add_flag("--force", rep_opt.force, "Overwrite an existing output dir");

  std::string val_config;
  std::vector<std::string> val_overrides;
  auto* val = app.add_subcommand("validate-config",
                                 "Parse and validate a config file");
  val->add_option("--config", val_config, "Scenario config file (JSON)")
      ->required();
  val->add_option("--override", val_overrides,
                  "Config override, section.key=value (repeatable)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    run_opt.config_path = run_config;
    if (run_seed_set) run_opt.seed = run_seed;
    return uuvnav::cmd_run(run_opt, std::cout, std::cerr);
  }
  if (rep->parsed()) {
    if (!rep_config.empty()) rep_opt.config_path = rep_config;
    return uuvnav::cmd_reproduce(rep_opt, std::cout, std::cerr);
  }
  return uuvnav::cmd_validate_config(val_config, val_overrides, std::cout,
                                     std::cerr);
}
