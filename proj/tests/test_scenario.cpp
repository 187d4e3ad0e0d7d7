#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "spinqc/scenario.hpp"
#include "test_helpers.hpp"

using namespace spinqc;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path dir =
      fs::temp_directory_path() / ("spinqc_test_" + tag + "_" +
                                   std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioConfig config_for(const std::string& text, const fs::path& dir) {
  auto cfg = validate_config(text);
  cfg.output.directory = dir.string();
  return cfg;
}

}  // namespace

TEST_SUITE("scenario") {

TEST_CASE("defaults reproduce the reference coupling") {
  const auto dir = fresh_dir("defaults");
  const auto cfg =
      config_for(R"({"scenario": "coupling", "parameters": {}})", dir);
  const auto report = run_scenario(cfg);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.all_ok());
  const double w = report.headline.at("W_ij_Hz");
  CHECK(std::abs(w - 15.0e3) <= 0.15 * 15.0e3);
  CHECK(oracles::rel_diff(w, oracles::golden::headline_w_ij_hz) < 1e-10);
  fs::remove_all(dir);
}

TEST_CASE("default_config documents round-trip through validate_config") {
  for (Scenario s : {Scenario::coupling, Scenario::range_profile,
                     Scenario::dynamics, Scenario::gate, Scenario::noise_sweep,
                     Scenario::init}) {
    const std::string text = default_config(s).dump();
    CHECK_NOTHROW(validate_config(text));
  }
}

TEST_CASE("validation errors carry the offending path") {
  using testing::check_throws_containing;
  check_throws_containing<ConfigError>(
      [] { validate_config("{nope"); }, "invalid JSON");
  check_throws_containing<ConfigError>(
      [] { validate_config(R"({"scenario": "warp"})"); }, "unknown scenario");
  check_throws_containing<ConfigError>(
      [] { validate_config(R"({"scenario": "coupling", "bogus": 1})"); },
      "unknown key");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "coupling", "parameters": {"J_fahrenheit": 9}})");
      },
      "parameters.J_fahrenheit");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "coupling", "parameters": {"J_kelvin": -2}})");
      },
      "parameters.J_kelvin");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "dynamics", "parameters": {"T_s_s": -1}})");
      },
      "parameters.T_s");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "coupling",
                "sweep": {"parameter": "parameters.n0_per_site",
                          "start": 0, "stop": 0.01, "count": 1}})");
      },
      "sweep.count");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "coupling",
                "sweep": {"parameter": "parameters.N_modes",
                          "start": 2, "stop": 10, "count": 3}})");
      },
      "real-valued");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "gate", "parameters": {"W_Hz": 0}})");
      },
      "gate not switchable");
  check_throws_containing<ConfigError>(
      [] {
        validate_config(
            R"({"scenario": "coupling", "output": {"formats": ["yaml"]}})");
      },
      "output.formats");
}

TEST_CASE("deterministic CSV bodies") {
  const auto dir_a = fresh_dir("det_a");
  const auto dir_b = fresh_dir("det_b");
  const std::string text = default_config(Scenario::coupling).dump();
  const auto ra = run_scenario(config_for(text, dir_a));
  const auto rb = run_scenario(config_for(text, dir_b));
  CHECK(ra.csv_body() == rb.csv_body());
  CHECK(slurp(dir_a / "coupling.csv") == slurp(dir_b / "coupling.csv"));

  // the CSV header carries unit suffixes
  const std::string body = ra.csv_body();
  CHECK(body.find("n0_per_site,W_ij_Hz\n") == 0);
  // 9 significant digits, scientific
  CHECK(body.find("e+") != std::string::npos);
  fs::remove_all(dir_a);
  fs::remove_all(dir_b);
}

TEST_CASE("dynamics scenario decay law") {
  const auto dir = fresh_dir("dyn");
  const auto cfg = config_for(
      R"({"scenario": "dynamics",
          "parameters": {"W_ex_per_s": 0, "n_init": 0.01, "T_s_s": 2.0,
                          "t_s": 6.0, "time_points": 4}})",
      dir);
  const auto report = run_scenario(cfg);
  REQUIRE(report.rows.size() == 4);
  CHECK(report.all_ok());
  // final point at t = 3*T_s
  CHECK(oracles::rel_diff(report.headline.at("n_final_frac"),
                          0.01 * std::exp(-3.0)) < 1e-12);
  fs::remove_all(dir);
}

TEST_CASE("gate scenario truth table") {
  const auto dir = fresh_dir("gate");
  const auto cfg = config_for(R"({"scenario": "gate"})", dir);
  const auto report = run_scenario(cfg);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.headline.at("mean_fidelity_frac") >= 0.999);
  CHECK(report.headline.at("h_tr_fractional_shift_ratio") == 0.01);
  // t_gate = 1/(2W)
  const double w = report.headline.at("W_Hz");
  CHECK(oracles::rel_diff(report.headline.at("t_gate_s"), 1.0 / (2.0 * w)) <
        1e-14);
  fs::remove_all(dir);
}

TEST_CASE("init scenario table") {
  const auto dir = fresh_dir("init");
  const auto cfg = config_for(R"({"scenario": "init"})", dir);
  const auto report = run_scenario(cfg);
  REQUIRE(report.rows.size() == 10);  // N = 1..10
  CHECK(oracles::rel_diff(report.headline.at("pure_state_fraction_rel"),
                          oracles::golden::pure_fraction_example) < 1e-12);
  fs::remove_all(dir);
}

TEST_CASE("coupling sweep is linear in n0") {
  const auto dir = fresh_dir("sweep");
  const auto cfg = config_for(
      R"({"scenario": "coupling",
          "sweep": {"parameter": "parameters.n0_per_site",
                    "start": 0.0, "stop": 0.01, "count": 3}})",
      dir);
  const auto report = run_sweep(cfg, 2);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.all_ok());
  CHECK(report.columns[0] == "n0_per_site");
  CHECK(report.columns[1] == "W_ij_Hz");
  CHECK(report.rows[0].values[1] == 0.0);
  CHECK(oracles::rel_diff(report.rows[1].values[1],
                          oracles::golden::headline_w_ij_hz / 2.0) < 1e-10);
  CHECK(oracles::rel_diff(report.rows[2].values[1],
                          oracles::golden::headline_w_ij_hz) < 1e-10);
  fs::remove_all(dir);
}

TEST_CASE("r_ij sweep tabulates the range profile") {
  const auto dir = fresh_dir("rsweep");
  const auto cfg = config_for(
      R"({"scenario": "coupling",
          "sweep": {"parameter": "parameters.r_ij_sites",
                    "start": 1, "stop": 20, "count": 20}})",
      dir);
  const auto report = run_sweep(cfg, 4);
  REQUIRE(report.rows.size() == 20);
  CHECK(report.all_ok());
  // spot-check two points against the direct evaluation
  // (row r corresponds to r_ij = 1..20)
  for (size_t i : {4UL, 9UL}) {
    const double r = report.rows[i].values[0];
    const double expected =
        oracles::golden::w_ij_prefactor_hz *
        oracles::lattice_sum_compensated(20, r);
    CHECK(oracles::rel_diff(report.rows[i].values[1], expected) < 1e-9);
  }
  fs::remove_all(dir);
}

TEST_CASE("noise sweep fidelity rises with T1") {
  const auto dir = fresh_dir("noise");
  const auto cfg = config_for(
      R"({"scenario": "noise_sweep",
          "sweep": {"parameter": "parameters.t_gate_over_T1",
                    "start": 1.0, "stop": 0.01, "count": 3, "scale": "log"}})",
      dir);
  const auto report = run_sweep(cfg);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.all_ok());
  // sweeping the ratio down from 1 to 0.01 means T1 grows: fidelity climbs
  CHECK(report.rows[0].values[1] < report.rows[1].values[1]);
  CHECK(report.rows[1].values[1] < report.rows[2].values[1]);
  fs::remove_all(dir);
}

TEST_CASE("sweep rows record failures without aborting the run") {
  const auto dir = fresh_dir("rowfail");
  // W_ex*T_s = 2 overflows the fraction model at late times
  const auto cfg = config_for(
      R"({"scenario": "dynamics",
          "parameters": {"T_s_s": 1.0, "n_init": 0.0, "t_s": 20.0},
          "sweep": {"parameter": "parameters.W_ex_per_s",
                    "start": 0.5, "stop": 2.0, "count": 4}})",
      dir);
  const auto report = run_sweep(cfg);
  REQUIRE(report.rows.size() == 4);
  CHECK(!report.all_ok());
  CHECK(report.rows[0].ok());   // steady state 0.5
  CHECK(!report.rows[3].ok());  // steady state 2.0
  CHECK(report.rows[3].error.find("exceeds 1") != std::string::npos);
  // failed rows pad with NaN to keep the CSV rectangular
  CHECK(std::isnan(report.rows[3].values[1]));

  // the JSON report lists the failures
  const auto doc = report.to_json();
  CHECK(doc.at("row_errors").size() == 2);  // 1.5 and 2.0 both overflow
  fs::remove_all(dir);
}

TEST_CASE("json report is stable and complete") {
  const auto dir = fresh_dir("json");
  const auto cfg = config_for(default_config(Scenario::coupling).dump(), dir);
  const auto report = run_scenario(cfg);
  const auto doc = report.to_json();
  CHECK(doc.at("scenario") == "coupling");
  CHECK(doc.at("version") == "0.1.0");
  CHECK(doc.at("resolved_parameters").contains("J_Hz"));
  CHECK(doc.at("resolved_parameters").contains("gamma_n_Hz_per_T"));
  CHECK(doc.at("columns").size() == 2);
  // two dumps agree except possibly wall_time_s (same object here)
  CHECK(doc.dump() == report.to_json().dump());
  CHECK(fs::exists(dir / "coupling_report.json"));
  fs::remove_all(dir);
}

}  // TEST_SUITE
