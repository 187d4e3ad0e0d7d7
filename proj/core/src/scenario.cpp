#include "spinqc/scenario.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <thread>

#include "spinqc/chain.hpp"
#include "spinqc/coupling.hpp"
#include "spinqc/gate.hpp"
#include "spinqc/initializer.hpp"
#include "spinqc/magnon.hpp"
#include "spinqc/relaxation.hpp"
#include "spinqc/units.hpp"
#include "spinqc/version.hpp"

namespace spinqc {

namespace fs = std::filesystem;
using nlohmann::json;

const char* to_string(Scenario s) {
  switch (s) {
    case Scenario::coupling: return "coupling";
    case Scenario::range_profile: return "range_profile";
    case Scenario::dynamics: return "dynamics";
    case Scenario::gate: return "gate";
    case Scenario::noise_sweep: return "noise_sweep";
    case Scenario::init: return "init";
  }
  return "?";
}

Scenario scenario_from_string(const std::string& name) {
  for (Scenario s : {Scenario::coupling, Scenario::range_profile,
                     Scenario::dynamics, Scenario::gate, Scenario::noise_sweep,
                     Scenario::init}) {
    if (name == to_string(s)) return s;
  }
  throw ConfigError("scenario: unknown scenario \"" + name +
                    "\" (expected coupling|range_profile|dynamics|gate|"
                    "noise_sweep|init)");
}

std::vector<double> SweepSpec::grid() const {
  std::vector<double> g(count);
  if (count == 1) {
    g[0] = start;
    return g;
  }
  if (scale == Scale::log) {
    const double ls = std::log(start), le = std::log(stop);
    for (int i = 0; i < count; ++i)
      g[i] = std::exp(ls + (le - ls) * i / (count - 1));
    g.back() = stop;  // pin the endpoint
  } else {
    for (int i = 0; i < count; ++i)
      g[i] = start + (stop - start) * i / (count - 1);
    g.back() = stop;
  }
  return g;
}

// ---------------------------------------------------------------------------
// parameter schemas
// ---------------------------------------------------------------------------

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ParamSpec {
  const char* key;
  const char* column;  // unit-suffixed column name when swept
  enum class Type { real, integer, text } type = Type::real;
  json def;
  double lo = -kInf;
  double hi = kInf;
  bool lo_excl = false;
  bool hi_excl = false;
  std::vector<const char*> choices = {};
  const char* constraint = nullptr;  // printable bound description
};

std::vector<ParamSpec> coupling_schema() {
  return {
      {"J_kelvin", "J_kelvin", ParamSpec::Type::real, 50.0, 0.0, kInf, true,
       false, {}, "must be > 0"},
      {"j1", "j1_ratio", ParamSpec::Type::real, 0.2, 0.0, 1.0, false, true, {},
       "must be in [0, 1)"},
      {"N_modes", "N_modes_count", ParamSpec::Type::integer, 20, 2.0, kInf,
       false, false, {}, "must be >= 2"},
      {"r_ij_sites", "r_ij_sites", ParamSpec::Type::real, 10.0},
      {"A_par_kOe_per_muB", "A_par_kOe_per_muB", ParamSpec::Type::real, 100.0,
       0.0, kInf, true, false, {}, "must be > 0"},
      {"gamma_n_MHz_per_kOe", "gamma_n_MHz_per_kOe", ParamSpec::Type::real,
       4.3, 0.0, kInf, true, false, {}, "must be > 0"},
      {"n0_per_site", "n0_per_site", ParamSpec::Type::real, 0.01, 0.0, 1.0,
       false, false, {}, "must be in [0, 1]"},
  };
}

std::vector<ParamSpec> gate_common_schema(double w_default) {
  return {
      {"W_Hz", "W_Hz", ParamSpec::Type::real, w_default},
      {"H_tr_T", "H_tr_T", ParamSpec::Type::real, 0.1, 0.0, kInf, false, false,
       {}, "must be >= 0"},
      {"gamma_n_MHz_per_kOe", "gamma_n_MHz_per_kOe", ParamSpec::Type::real,
       4.3, 0.0, kInf, true, false, {}, "must be > 0"},
      {"frame", "frame", ParamSpec::Type::text, "shifted", 0, 0, false, false,
       {"shifted", "bare"}},
      {"second_pulse_axis", "second_pulse_axis", ParamSpec::Type::text, "+Y",
       0, 0, false, false, {"+Y", "-Y"}},
  };
}

double default_coupling_w_hz() {
  // headline of the default parameter set; also the default gate coupling
  LadderParameters ladder;
  ladder.j_hz = kelvin_to_hz(50.0);
  ladder.j1 = 0.2;
  ladder.g_factor = 2.0;
  ladder.n_chain = 20;
  HyperfineParameters hf;
  hf.a_par_t_per_mu_b = kilo_oersted_to_tesla(100.0);
  hf.gamma_n_hz_per_t = mhz_per_koe_to_hz_per_t(4.3);
  return w_ij_k0(0.01, ladder, hf, 20, 10.0);
}

std::vector<ParamSpec> schema_for(Scenario s) {
  switch (s) {
    case Scenario::coupling:
      return coupling_schema();
    case Scenario::range_profile: {
      auto sch = coupling_schema();
      sch.push_back({"r_max_sites", "r_max_sites", ParamSpec::Type::integer,
                     20, 1.0, kInf, false, false, {}, "must be >= 1"});
      return sch;
    }
    case Scenario::dynamics:
      return {
          {"W_ex_per_s", "W_ex_per_s", ParamSpec::Type::real, 0.01, 0.0, kInf,
           false, false, {}, "must be >= 0"},
          {"T_s_s", "T_s_s", ParamSpec::Type::real, 1.0, 0.0, kInf, true,
           false, {}, "must be > 0"},
          {"n_init", "n_init_frac", ParamSpec::Type::real, 0.0, 0.0, 1.0,
           false, false, {}, "must be in [0, 1]"},
          {"t_s", "t_s", ParamSpec::Type::real, 5.0, 0.0, kInf, false, false,
           {}, "must be >= 0"},
          {"time_points", "time_points_count", ParamSpec::Type::integer, 101,
           2.0, kInf, false, false, {}, "must be >= 2"},
          {"kappa_per_s_per_W", "kappa_per_s_per_W", ParamSpec::Type::real,
           0.0, 0.0, kInf, false, false, {}, "must be >= 0"},
          {"P_mw_W", "P_mw_W", ParamSpec::Type::real, 0.0, 0.0, kInf, false,
           false, {}, "must be >= 0"},
      };
    case Scenario::gate: {
      auto sch = gate_common_schema(default_coupling_w_hz());
      sch.push_back({"field_T", "field_T", ParamSpec::Type::real, 10.0, 0.0,
                     kInf, true, false, {}, "must be > 0"});
      return sch;
    }
    case Scenario::noise_sweep: {
      auto sch = gate_common_schema(default_coupling_w_hz());
      sch.push_back({"t_gate_over_T1", "t_gate_over_T1_ratio",
                     ParamSpec::Type::real, 0.1, 0.0, kInf, true, false, {},
                     "must be > 0"});
      return sch;
    }
    case Scenario::init:
      return {
          {"omega_n_Hz", "omega_n_Hz", ParamSpec::Type::real, 4.3e8, 0.0, kInf,
           true, false, {}, "must be > 0"},
          {"T_bath_K", "T_bath_K", ParamSpec::Type::real, 1.0, 0.0, kInf, true,
           false, {}, "must be > 0"},
          {"N_qubits", "N_qubits_count", ParamSpec::Type::integer, 10, 1.0,
           24.0, false, false, {}, "must be in [1, 24]"},
          {"P_e", "P_e_frac", ParamSpec::Type::real, 1.0, 0.0, 1.0, false,
           false, {}, "must be in [0, 1]"},
          {"tau_transfer_s", "tau_transfer_s", ParamSpec::Type::real, 1.0, 0.0,
           kInf, true, false, {}, "must be > 0"},
          {"t_pump_s", "t_pump_s", ParamSpec::Type::real, 3.0, 0.0, kInf,
           false, false, {}, "must be >= 0"},
      };
  }
  throw std::logic_error("schema_for: unhandled scenario");
}

const ParamSpec* find_spec(const std::vector<ParamSpec>& schema,
                           const std::string& key) {
  for (const auto& spec : schema) {
    if (key == spec.key) return &spec;
  }
  return nullptr;
}

void check_value(const ParamSpec& spec, const json& value,
                 const std::string& path) {
  if (spec.type == ParamSpec::Type::text) {
    if (!value.is_string())
      throw ConfigError(path + ": expected a string");
    const std::string v = value.get<std::string>();
    for (const char* c : spec.choices) {
      if (v == c) return;
    }
    std::string allowed;
    for (const char* c : spec.choices) {
      if (!allowed.empty()) allowed += "|";
      allowed += c;
    }
    throw ConfigError(path + ": must be one of " + allowed);
  }
  if (!value.is_number())
    throw ConfigError(path + ": expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ConfigError(path + ": must be finite");
  if (spec.type == ParamSpec::Type::integer && v != std::floor(v)) {
    throw ConfigError(path + ": expected an integer");
  }
  const bool below = spec.lo_excl ? !(v > spec.lo) : !(v >= spec.lo);
  const bool above = spec.hi_excl ? !(v < spec.hi) : !(v <= spec.hi);
  if (below || above) {
    throw ConfigError(path + ": " +
                      (spec.constraint ? spec.constraint : "out of range"));
  }
}

json defaults_for(Scenario s) {
  json out = json::object();
  for (const auto& spec : schema_for(s)) out[spec.key] = spec.def;
  return out;
}

double effective_w_ex(const json& p) {
  const double kappa = p.at("kappa_per_s_per_W").get<double>();
  const double power = p.at("P_mw_W").get<double>();
  if (kappa > 0.0 && power > 0.0)
    return excitation_rate_from_power(kappa, power);
  return p.at("W_ex_per_s").get<double>();
}

void cross_validate(Scenario s, const json& p) {
  switch (s) {
    case Scenario::dynamics: {
      const double steady = effective_w_ex(p) * p.at("T_s_s").get<double>();
      if (steady > 1.0) {
        throw ConfigError(
            "parameters.W_ex_per_s: steady state W_ex*T_s = " +
            std::to_string(steady) + " exceeds 1 (population is a fraction)");
      }
      break;
    }
    case Scenario::gate:
    case Scenario::noise_sweep:
      if (p.at("W_Hz").get<double>() == 0.0) {
        throw ConfigError("parameters.W_Hz: must be nonzero (gate not switchable)");
      }
      break;
    default:
      break;
  }
}

// --------------------------- record builders ------------------------------

LadderParameters ladder_from(const json& p) {
  LadderParameters l;
  l.j_hz = kelvin_to_hz(p.at("J_kelvin").get<double>());
  l.j1 = p.at("j1").get<double>();
  l.g_factor = 2.0;
  l.n_chain = p.at("N_modes").get<int>();
  l.validate();
  return l;
}

HyperfineParameters hyperfine_from(const json& p) {
  HyperfineParameters hf;
  hf.a_par_t_per_mu_b =
      kilo_oersted_to_tesla(p.at("A_par_kOe_per_muB").get<double>());
  hf.a_perp_t_per_mu_b = 0.0;
  hf.gamma_n_hz_per_t =
      mhz_per_koe_to_hz_per_t(p.at("gamma_n_MHz_per_kOe").get<double>());
  hf.validate();
  return hf;
}

GateParameters gate_from(const json& p) {
  GateParameters g;
  g.w_hz = p.at("W_Hz").get<double>();
  g.h_tr_t = p.at("H_tr_T").get<double>();
  g.gamma_n_hz_per_t =
      mhz_per_koe_to_hz_per_t(p.at("gamma_n_MHz_per_kOe").get<double>());
  g.frame = p.at("frame").get<std::string>() == "bare" ? Frame::bare
                                                       : Frame::shifted;
  g.second_pulse_axis = p.at("second_pulse_axis").get<std::string>() == "-Y"
                            ? Axis::minus_y
                            : Axis::plus_y;
  return g;
}

json resolve_internal(Scenario s, const json& p) {
  json out = json::object();
  switch (s) {
    case Scenario::coupling:
    case Scenario::range_profile: {
      out["J_Hz"] = kelvin_to_hz(p.at("J_kelvin").get<double>());
      out["j1_ratio"] = p.at("j1");
      out["N_modes_count"] = p.at("N_modes");
      out["r_ij_sites"] = p.at("r_ij_sites");
      out["A_par_T_per_muB"] =
          kilo_oersted_to_tesla(p.at("A_par_kOe_per_muB").get<double>());
      out["gamma_n_Hz_per_T"] =
          mhz_per_koe_to_hz_per_t(p.at("gamma_n_MHz_per_kOe").get<double>());
      out["n0_per_site"] = p.at("n0_per_site");
      if (s == Scenario::range_profile) out["r_max_sites"] = p.at("r_max_sites");
      break;
    }
    case Scenario::dynamics:
      out["W_ex_per_s"] = effective_w_ex(p);
      out["T_s_s"] = p.at("T_s_s");
      out["n_init_frac"] = p.at("n_init");
      out["t_s"] = p.at("t_s");
      out["time_points_count"] = p.at("time_points");
      break;
    case Scenario::gate:
    case Scenario::noise_sweep: {
      out["W_Hz"] = p.at("W_Hz");
      out["H_tr_T"] = p.at("H_tr_T");
      out["gamma_n_Hz_per_T"] =
          mhz_per_koe_to_hz_per_t(p.at("gamma_n_MHz_per_kOe").get<double>());
      out["frame"] = p.at("frame");
      out["second_pulse_axis"] = p.at("second_pulse_axis");
      if (s == Scenario::gate) {
        out["field_T"] = p.at("field_T");
      } else {
        out["t_gate_over_T1_ratio"] = p.at("t_gate_over_T1");
      }
      break;
    }
    case Scenario::init:
      out["omega_n_Hz"] = p.at("omega_n_Hz");
      out["T_bath_K"] = p.at("T_bath_K");
      out["N_qubits_count"] = p.at("N_qubits");
      out["P_e_frac"] = p.at("P_e");
      out["tau_transfer_s"] = p.at("tau_transfer_s");
      out["t_pump_s"] = p.at("t_pump_s");
      break;
  }
  return out;
}

// --------------------------- evaluation -----------------------------------

struct EvalTable {
  std::vector<std::string> columns;
  std::vector<ResultRow> rows;
  std::map<std::string, double> headline;
};

EvalTable evaluate_base(Scenario s, const json& p) {
  EvalTable out;
  switch (s) {
    case Scenario::coupling: {
      const auto ladder = ladder_from(p);
      const auto hf = hyperfine_from(p);
      const double n0 = p.at("n0_per_site").get<double>();
      const double w = w_ij_k0(n0, ladder, hf, p.at("N_modes").get<int>(),
                               p.at("r_ij_sites").get<double>());
      out.columns = {"n0_per_site", "W_ij_Hz"};
      out.rows.push_back({{n0, w}, ""});
      out.headline["W_ij_Hz"] = w;
      break;
    }
    case Scenario::range_profile: {
      const auto ladder = ladder_from(p);
      const auto hf = hyperfine_from(p);
      const int n_modes = p.at("N_modes").get<int>();
      const double n0 = p.at("n0_per_site").get<double>();
      const auto occ = MagnonOccupation::driven(n_modes, n0 * n_modes);
      out.columns = {"r_sites", "W_ij_Hz"};
      const int r_max = p.at("r_max_sites").get<int>();
      for (int r = 0; r <= r_max; ++r) {
        ResultRow row;
        try {
          const double w = w_ij_general(occ, ladder, hf, r);
          row.values = {static_cast<double>(r), w};
        } catch (const std::exception& e) {
          row.values = {static_cast<double>(r),
                        std::numeric_limits<double>::quiet_NaN()};
          row.error = e.what();
        }
        out.rows.push_back(std::move(row));
      }
      out.headline["W_ij_Hz"] = w_ij_k0(n0, ladder, hf, n_modes,
                                        p.at("r_ij_sites").get<double>());
      break;
    }
    case Scenario::dynamics: {
      ExcitationParameters ex;
      ex.w_ex_per_s = effective_w_ex(p);
      ex.t_s_s = p.at("T_s_s").get<double>();
      ex.kappa_per_s_per_w = p.at("kappa_per_s_per_W").get<double>();
      ex.p_mw_w = p.at("P_mw_W").get<double>();
      ex.validate();
      const double n_init = p.at("n_init").get<double>();
      const double t_total = p.at("t_s").get<double>();
      const int points = p.at("time_points").get<int>();
      out.columns = {"t_s", "n0_frac"};
      double n_final = std::numeric_limits<double>::quiet_NaN();
      for (int i = 0; i < points; ++i) {
        const double t = t_total * i / (points - 1);
        ResultRow row;
        try {
          const double n = evolve_population(n_init, ex, t);
          row.values = {t, n};
          n_final = n;
        } catch (const std::exception& e) {
          row.values = {t, std::numeric_limits<double>::quiet_NaN()};
          row.error = e.what();
        }
        out.rows.push_back(std::move(row));
      }
      out.headline["n_final_frac"] = n_final;
      out.headline["n_steady_frac"] = ex.steady_state();
      break;
    }
    case Scenario::gate: {
      const GateParameters g = gate_from(p);
      const double t_gate = g.resolved_t_gate_s();
      const auto table = cnot_truth_table(g);
      const double mean =
          (table[0] + table[1] + table[2] + table[3]) / 4.0;
      out.columns = {"W_Hz",
                     "t_gate_s",
                     "fidelity_00_frac",
                     "fidelity_01_frac",
                     "fidelity_10_frac",
                     "fidelity_11_frac",
                     "mean_fidelity_frac"};
      out.rows.push_back({{g.w_hz, t_gate, table[0], table[1], table[2],
                           table[3], mean},
                          ""});
      out.headline["mean_fidelity_frac"] = mean;
      out.headline["t_gate_s"] = t_gate;
      out.headline["W_Hz"] = g.w_hz;
      out.headline["h_tr_fractional_shift_ratio"] =
          g.h_tr_t / p.at("field_T").get<double>();
      break;
    }
    case Scenario::noise_sweep: {
      const GateParameters g = gate_from(p);
      const double ratio = p.at("t_gate_over_T1").get<double>();
      const double t1 = g.resolved_t_gate_s() / ratio;
      const double fid = gate_fidelity_vs_noise(g, t1);
      out.columns = {"t_gate_over_T1_ratio", "fidelity_frac"};
      out.rows.push_back({{ratio, fid}, ""});
      out.headline["fidelity_frac"] = fid;
      break;
    }
    case Scenario::init: {
      const double omega = p.at("omega_n_Hz").get<double>();
      const double t_bath = p.at("T_bath_K").get<double>();
      const int n_qubits = p.at("N_qubits").get<int>();
      out.columns = {"N_qubits_count", "pure_state_fraction_rel"};
      for (int n = 1; n <= n_qubits; ++n) {
        out.rows.push_back(
            {{static_cast<double>(n), pure_state_fraction(omega, t_bath, n)},
             ""});
      }
      out.headline["pure_state_fraction_rel"] =
          pure_state_fraction(omega, t_bath, n_qubits);
      const double p_n = polarization_buildup(
          p.at("P_e").get<double>(), p.at("tau_transfer_s").get<double>(),
          p.at("t_pump_s").get<double>());
      out.headline["nuclear_polarization_frac"] = p_n;
      // initial populations of the two-qubit gate register at this P_n
      const auto reg = initial_register_state(p_n, 2);
      out.headline["register_p00_frac"] = reg[0];
      out.headline["register_p01_frac"] = reg[1];
      out.headline["register_p10_frac"] = reg[2];
      out.headline["register_p11_frac"] = reg[3];
      break;
    }
  }
  return out;
}

std::vector<std::string> sweep_value_columns(Scenario s) {
  switch (s) {
    case Scenario::coupling: return {"W_ij_Hz"};
    case Scenario::dynamics: return {"n_final_frac"};
    case Scenario::gate:
      return {"t_gate_s",          "fidelity_00_frac", "fidelity_01_frac",
              "fidelity_10_frac",  "fidelity_11_frac", "mean_fidelity_frac"};
    case Scenario::noise_sweep: return {"fidelity_frac"};
    case Scenario::init: return {"pure_state_fraction_rel"};
    case Scenario::range_profile:
      throw ConfigError(
          "sweep: range_profile already tabulates r; sweep a coupling "
          "parameter instead");
  }
  throw std::logic_error("sweep_value_columns: unhandled scenario");
}

std::vector<double> sweep_point(Scenario s, const json& p) {
  switch (s) {
    case Scenario::coupling: {
      const auto ladder = ladder_from(p);
      const auto hf = hyperfine_from(p);
      return {w_ij_k0(p.at("n0_per_site").get<double>(), ladder, hf,
                      p.at("N_modes").get<int>(),
                      p.at("r_ij_sites").get<double>())};
    }
    case Scenario::dynamics: {
      ExcitationParameters ex;
      ex.w_ex_per_s = effective_w_ex(p);
      ex.t_s_s = p.at("T_s_s").get<double>();
      ex.validate();
      return {evolve_population(p.at("n_init").get<double>(), ex,
                                p.at("t_s").get<double>())};
    }
    case Scenario::gate: {
      const GateParameters g = gate_from(p);
      const auto table = cnot_truth_table(g);
      const double mean = (table[0] + table[1] + table[2] + table[3]) / 4.0;
      return {g.resolved_t_gate_s(), table[0], table[1], table[2], table[3],
              mean};
    }
    case Scenario::noise_sweep: {
      const GateParameters g = gate_from(p);
      const double ratio = p.at("t_gate_over_T1").get<double>();
      return {gate_fidelity_vs_noise(g, g.resolved_t_gate_s() / ratio)};
    }
    case Scenario::init:
      return {pure_state_fraction(p.at("omega_n_Hz").get<double>(),
                                  p.at("T_bath_K").get<double>(),
                                  p.at("N_qubits").get<int>())};
    case Scenario::range_profile:
      break;
  }
  throw std::logic_error("sweep_point: unhandled scenario");
}

// --------------------------- formatting -----------------------------------

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

void atomic_write(const fs::path& path, const std::string& body) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << body;
  }
  fs::rename(tmp, path);
}

void write_outputs(const ScenarioConfig& cfg, const RunReport& report) {
  const fs::path dir = cfg.output.directory;
  fs::create_directories(dir);
  if (cfg.output.csv) {
    atomic_write(dir / (report.scenario + ".csv"), report.csv_body());
  }
  if (cfg.output.json) {
    atomic_write(dir / (report.scenario + "_report.json"),
                 report.to_json().dump(2) + "\n");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

bool RunReport::all_ok() const {
  for (const auto& row : rows) {
    if (!row.ok()) return false;
  }
  return true;
}

std::string RunReport::csv_body() const {
  std::string body;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) body += ',';
    body += columns[i];
  }
  body += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.values.size(); ++i) {
      if (i) body += ',';
      body += format_value(row.values[i]);
    }
    body += '\n';
  }
  return body;
}

json RunReport::to_json() const {
  json rows_json = json::array();
  json errors_json = json::array();
  for (size_t i = 0; i < rows.size(); ++i) {
    rows_json.push_back(rows[i].values);
    if (!rows[i].ok()) {
      errors_json.push_back({{"index", i}, {"message", rows[i].error}});
    }
  }
  return json{{"scenario", scenario},
              {"resolved_parameters", resolved_parameters},
              {"columns", columns},
              {"rows", rows_json},
              {"row_errors", errors_json},
              {"headline", headline},
              {"version", version},
              {"wall_time_s", wall_time_s}};
}

// ---------------------------------------------------------------------------
// config
// ---------------------------------------------------------------------------

json default_config(Scenario s) {
  json cfg;
  cfg["scenario"] = to_string(s);
  cfg["parameters"] = defaults_for(s);
  cfg["output"] = {{"directory", "."}, {"formats", {"csv", "json"}}};
  if (s == Scenario::noise_sweep) {
    cfg["sweep"] = {{"parameter", "parameters.t_gate_over_T1"},
                    {"start", 0.01},
                    {"stop", 1.0},
                    {"count", 3},
                    {"scale", "log"}};
  }
  return cfg;
}

ScenarioConfig validate_config(const std::string& raw_json_text) {
  json doc;
  try {
    doc = json::parse(raw_json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key != "scenario" && key != "parameters" && key != "sweep" &&
        key != "output") {
      throw ConfigError("config: unknown key \"" + key + "\"");
    }
  }
  if (!doc.contains("scenario") || !doc["scenario"].is_string()) {
    throw ConfigError("scenario: missing required key (a string)");
  }

  ScenarioConfig cfg;
  cfg.scenario = scenario_from_string(doc["scenario"].get<std::string>());

  const auto schema = schema_for(cfg.scenario);
  cfg.parameters = defaults_for(cfg.scenario);
  if (doc.contains("parameters")) {
    if (!doc["parameters"].is_object())
      throw ConfigError("parameters: expected an object");
    for (const auto& [key, value] : doc["parameters"].items()) {
      const ParamSpec* spec = find_spec(schema, key);
      if (!spec) {
        throw ConfigError("parameters." + key + ": unknown key for scenario " +
                          to_string(cfg.scenario));
      }
      check_value(*spec, value, "parameters." + key);
      cfg.parameters[key] = value;
    }
  }
  cross_validate(cfg.scenario, cfg.parameters);

  if (doc.contains("sweep") && !doc["sweep"].is_null()) {
    const json& sw = doc["sweep"];
    if (!sw.is_object()) throw ConfigError("sweep: expected an object");
    for (const auto& [key, value] : sw.items()) {
      if (key != "parameter" && key != "start" && key != "stop" &&
          key != "count" && key != "scale") {
        throw ConfigError("sweep." + key + ": unknown key");
      }
    }
    SweepSpec spec;
    if (!sw.contains("parameter") || !sw["parameter"].is_string()) {
      throw ConfigError("sweep.parameter: missing required key (a string)");
    }
    spec.parameter = sw["parameter"].get<std::string>();
    const std::string prefix = "parameters.";
    if (spec.parameter.rfind(prefix, 0) != 0) {
      throw ConfigError(
          "sweep.parameter: must be qualified as \"parameters.<key>\"");
    }
    const std::string key = spec.parameter.substr(prefix.size());
    const ParamSpec* pspec = find_spec(schema, key);
    if (!pspec) {
      throw ConfigError("sweep.parameter: \"" + key +
                        "\" is not a parameter of scenario " +
                        to_string(cfg.scenario));
    }
    if (pspec->type != ParamSpec::Type::real) {
      throw ConfigError("sweep.parameter: only real-valued parameters can be "
                        "swept");
    }
    if (!sw.contains("start") || !sw["start"].is_number())
      throw ConfigError("sweep.start: missing required number");
    if (!sw.contains("stop") || !sw["stop"].is_number())
      throw ConfigError("sweep.stop: missing required number");
    if (!sw.contains("count") || !sw["count"].is_number())
      throw ConfigError("sweep.count: missing required integer");
    spec.start = sw["start"].get<double>();
    spec.stop = sw["stop"].get<double>();
    const double count_raw = sw["count"].get<double>();
    if (count_raw != std::floor(count_raw))
      throw ConfigError("sweep.count: expected an integer");
    spec.count = static_cast<int>(count_raw);
    if (spec.count < 2) throw ConfigError("sweep.count: must be >= 2");
    if (sw.contains("scale")) {
      const std::string scale = sw["scale"].get<std::string>();
      if (scale == "log") {
        spec.scale = SweepSpec::Scale::log;
      } else if (scale == "linear") {
        spec.scale = SweepSpec::Scale::linear;
      } else {
        throw ConfigError("sweep.scale: must be \"linear\" or \"log\"");
      }
    }
    if (spec.scale == SweepSpec::Scale::log &&
        (!(spec.start > 0.0) || !(spec.stop > 0.0))) {
      throw ConfigError("sweep.scale: log scale requires start, stop > 0");
    }
    // bound-check endpoints against the parameter's own range
    check_value(*pspec, json(spec.start), "sweep.start");
    check_value(*pspec, json(spec.stop), "sweep.stop");
    // range_profile has no point evaluation; reject early
    sweep_value_columns(cfg.scenario);
    cfg.sweep = spec;
  }

  if (doc.contains("output")) {
    const json& out = doc["output"];
    if (!out.is_object()) throw ConfigError("output: expected an object");
    for (const auto& [key, value] : out.items()) {
      if (key != "directory" && key != "formats") {
        throw ConfigError("output." + key + ": unknown key");
      }
    }
    if (out.contains("directory")) {
      if (!out["directory"].is_string())
        throw ConfigError("output.directory: expected a string");
      cfg.output.directory = out["directory"].get<std::string>();
    }
    if (out.contains("formats")) {
      if (!out["formats"].is_array())
        throw ConfigError("output.formats: expected an array");
      cfg.output.csv = false;
      cfg.output.json = false;
      for (const auto& f : out["formats"]) {
        if (!f.is_string())
          throw ConfigError("output.formats: entries must be strings");
        const std::string name = f.get<std::string>();
        if (name == "csv") {
          cfg.output.csv = true;
        } else if (name == "json") {
          cfg.output.json = true;
        } else {
          throw ConfigError("output.formats: entries must be \"csv\" or "
                            "\"json\"");
        }
      }
    }
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// execution
// ---------------------------------------------------------------------------

RunReport run_sweep(const ScenarioConfig& cfg, int jobs) {
  if (!cfg.sweep.has_value()) {
    throw ConfigError("run_sweep: config has no sweep axis");
  }
  const auto start_time = std::chrono::steady_clock::now();
  const SweepSpec& sweep = *cfg.sweep;
  const std::string key = sweep.parameter.substr(std::string("parameters.").size());
  const auto schema = schema_for(cfg.scenario);
  const ParamSpec* pspec = find_spec(schema, key);

  RunReport report;
  report.scenario = to_string(cfg.scenario);
  report.resolved_parameters = resolve_internal(cfg.scenario, cfg.parameters);
  report.version = version_string;
  report.columns.push_back(pspec->column);
  for (const auto& c : sweep_value_columns(cfg.scenario))
    report.columns.push_back(c);

  const std::vector<double> grid = sweep.grid();
  report.rows.assign(grid.size(), ResultRow{});

  const int workers = std::max(
      1, std::min<int>(jobs, static_cast<int>(grid.size())));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) {
      json point = cfg.parameters;
      point[key] = grid[i];
      ResultRow row;
      row.values.push_back(grid[i]);
      try {
        const auto values = sweep_point(cfg.scenario, point);
        row.values.insert(row.values.end(), values.begin(), values.end());
      } catch (const std::exception& e) {
        row.error = e.what();
        row.values.resize(report.columns.size(),
                          std::numeric_limits<double>::quiet_NaN());
      }
      report.rows[i] = std::move(row);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  size_t failed = 0;
  for (const auto& row : report.rows) {
    if (!row.ok()) ++failed;
  }
  report.headline["rows_count"] = static_cast<double>(report.rows.size());
  report.headline["rows_failed_count"] = static_cast<double>(failed);
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  write_outputs(cfg, report);
  return report;
}

RunReport run_scenario(const ScenarioConfig& cfg, int jobs) {
  if (cfg.sweep.has_value()) return run_sweep(cfg, jobs);
  const auto start_time = std::chrono::steady_clock::now();

  EvalTable table = evaluate_base(cfg.scenario, cfg.parameters);
  RunReport report;
  report.scenario = to_string(cfg.scenario);
  report.resolved_parameters = resolve_internal(cfg.scenario, cfg.parameters);
  report.columns = std::move(table.columns);
  report.rows = std::move(table.rows);
  report.headline = std::move(table.headline);
  report.version = version_string;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  write_outputs(cfg, report);
  return report;
}

}  // namespace spinqc
