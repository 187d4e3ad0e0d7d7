#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace spinqc {

// Batch front end: one JSON config per run, unit-tagged parameter keys,
// deterministic CSV/JSON emission. Defaults reproduce the reference
// parameter set (J = 50 K, j1 = 0.2, N = 20, r_ij = 10, A_par = 100
// kOe/mu_B, gamma_n/2pi = 4.3 MHz/kOe, n0/N = 0.01), so `run coupling`
// with an empty parameter block reports the ~15 kHz headline coupling.

enum class Scenario { coupling, range_profile, dynamics, gate, noise_sweep, init };

const char* to_string(Scenario s);
Scenario scenario_from_string(const std::string& name);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::string parameter;  // "parameters.<key>"
  double start = 0.0;
  double stop = 0.0;
  int count = 0;
  enum class Scale { linear, log } scale = Scale::linear;

  std::vector<double> grid() const;
};

struct OutputSpec {
  std::string directory = ".";
  bool csv = true;
  bool json = true;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::coupling;
  nlohmann::json parameters;  // fully resolved, defaults applied
  std::optional<SweepSpec> sweep;
  OutputSpec output;
};

struct ResultRow {
  std::vector<double> values;
  std::string error;  // empty when the point succeeded
  bool ok() const { return error.empty(); }
};

struct RunReport {
  std::string scenario;
  nlohmann::json resolved_parameters;  // internal units (Hz, T, s, sites)
  std::vector<std::string> columns;    // every name carries a unit suffix
  std::vector<ResultRow> rows;
  std::map<std::string, double> headline;
  std::string version;
  double wall_time_s = 0.0;

  bool all_ok() const;
  /// Header + data rows, LF endings, '.' decimal, %.8e (9 significant
  /// digits). Byte-identical for identical configs.
  std::string csv_body() const;
  /// Stable key ordering; wall_time_s is excluded from the determinism
  /// contract.
  nlohmann::json to_json() const;
};

/// Default config document for a scenario (defaults = the reference
/// parameter set above).
nlohmann::json default_config(Scenario s);

/// Parses and validates a raw JSON document: defaults applied, unknown or
/// out-of-range keys rejected with path-qualified messages.
ScenarioConfig validate_config(const std::string& raw_json_text);

/// Executes the scenario (dispatching to run_sweep when a sweep is
/// configured), writes the requested output files atomically, and returns
/// the report. Point failures are recorded per-row; the run continues.
RunReport run_scenario(const ScenarioConfig& cfg, int jobs = 1);

/// Evaluates the scenario once per sweep grid point; rows are ordered by
/// grid index regardless of execution order.
RunReport run_sweep(const ScenarioConfig& cfg, int jobs = 1);

}  // namespace spinqc
