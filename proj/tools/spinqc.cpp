// spinqc: batch front end for the spin-chain gate simulator.
//   spinqc run --config cfg.json [--out dir] [--format csv,json] [--jobs n]
//   spinqc validate --config cfg.json
//   spinqc defaults --scenario coupling
// SPINQC_JOBS caps the worker count the same way --jobs does.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "spinqc/scenario.hpp"
#include "spinqc/version.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_error(const std::string& message) {
  nlohmann::json err{{"error", message}};
  std::cerr << err.dump() << "\n";
}

int resolve_jobs(int requested) {
  int jobs = requested > 0 ? requested
                           : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  if (const char* env = std::getenv("SPINQC_JOBS")) {
    const int cap = std::atoi(env);
    if (cap > 0 && cap < jobs) jobs = cap;
  }
  return jobs;
}

void apply_overrides(spinqc::ScenarioConfig& cfg, const std::string& out_dir,
                     const std::string& formats) {
  if (!out_dir.empty()) cfg.output.directory = out_dir;
  if (!formats.empty()) {
    cfg.output.csv = false;
    cfg.output.json = false;
    std::stringstream ss(formats);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item == "csv") {
        cfg.output.csv = true;
      } else if (item == "json") {
        cfg.output.json = true;
      } else {
        throw spinqc::ConfigError("--format: entries must be csv or json");
      }
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spin-chain NMR gate simulator batch runner"};
  app.set_version_flag("--version", spinqc::version_string);
  app.require_subcommand(1);

  std::string config_path, out_dir, formats, scenario_name;
  int jobs = 0;

  auto* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("--config", config_path, "path to the JSON config")
      ->required();
  run->add_option("--out", out_dir, "output directory (overrides config)");
  run->add_option("--format", formats, "comma-separated subset of csv,json");
  run->add_option("--jobs", jobs, "max concurrent sweep workers");

  auto* validate = app.add_subcommand("validate", "validate a config and echo it");
  validate->add_option("--config", config_path, "path to the JSON config")
      ->required();

  auto* defaults = app.add_subcommand("defaults", "print the default config");
  defaults
      ->add_option("--scenario", scenario_name,
                   "coupling|range_profile|dynamics|gate|noise_sweep|init")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (defaults->parsed()) {
      const auto s = spinqc::scenario_from_string(scenario_name);
      std::cout << spinqc::default_config(s).dump(2) << "\n";
      return 0;
    }

    spinqc::ScenarioConfig cfg = spinqc::validate_config(read_file(config_path));

    if (validate->parsed()) {
      nlohmann::json echo{{"scenario", spinqc::to_string(cfg.scenario)},
                          {"parameters", cfg.parameters},
                          {"valid", true}};
      std::cout << echo.dump(2) << "\n";
      return 0;
    }

    apply_overrides(cfg, out_dir, formats);
    const spinqc::RunReport report =
        spinqc::run_scenario(cfg, resolve_jobs(jobs));

    for (const auto& [key, value] : report.headline) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.9g", value);
      std::cout << key << " = " << buf << "\n";
    }
    if (!report.all_ok()) {
      nlohmann::json summary{{"error", "one or more rows failed"},
                             {"row_errors", nlohmann::json::array()}};
      for (size_t i = 0; i < report.rows.size(); ++i) {
        if (!report.rows[i].ok()) {
          summary["row_errors"].push_back(
              {{"index", i}, {"message", report.rows[i].error}});
        }
      }
      std::cerr << summary.dump() << "\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    print_error(e.what());
    return 1;
  }
}
