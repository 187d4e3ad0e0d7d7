#include "spinqc/coupling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinqc {

namespace {

double coupling_prefactor_hz(const HyperfineParameters& hf) {
  // gamma_n*A_par evaluated as (gamma_n/2pi)*A_par: Hz per mu_B, with the
  // electron moment in mu_B cancelling. This convention reproduces the
  // textbook magnitude of the coupling; the angular alternative is off by
  // (2pi)^2.
  return hf.gamma_n_hz_per_t * hf.a_par_t_per_mu_b;
}

std::vector<double> relative_mode_energies(const MagnonOccupation& occ,
                                           const LadderParameters& params) {
  std::vector<double> eps(occ.grid_size());
  for (int i = 0; i < occ.grid_size(); ++i) {
    eps[i] = magnon_dispersion(params, occ.wavenumber(i));
  }
  return eps;
}

}  // namespace

MagnonOccupation MagnonOccupation::driven(int n_modes, double n0_count) {
  if (n_modes < 2)
    throw std::invalid_argument("MagnonOccupation: need at least 2 modes");
  if (n0_count < 0.0)
    throw std::invalid_argument("MagnonOccupation: populations must be >= 0");
  MagnonOccupation occ;
  occ.mode_count = n_modes;
  occ.n_k0 = n0_count;
  occ.n_k.assign(n_modes, 0.0);  // n(k) = 0 for k != 0 under microwave drive
  return occ;
}

MagnonOccupation MagnonOccupation::uniform(int n_modes, double n_each) {
  if (n_modes < 2)
    throw std::invalid_argument("MagnonOccupation: need at least 2 modes");
  if (n_each < 0.0)
    throw std::invalid_argument("MagnonOccupation: populations must be >= 0");
  MagnonOccupation occ;
  occ.mode_count = n_modes;
  occ.n_k0 = n_each;
  occ.n_k.assign(n_modes, n_each);
  return occ;
}

double MagnonOccupation::population(int grid_index) const {
  return grid_index == 0 ? n_k0 : n_k.at(grid_index - 1);
}

double MagnonOccupation::wavenumber(int grid_index) const {
  // the band edge is k = pi by construction; i*pi/N can round a hair above
  if (grid_index == mode_count) return std::numbers::pi;
  return grid_index * std::numbers::pi / mode_count;
}

void MagnonOccupation::validate() const {
  if (mode_count < 2)
    throw std::invalid_argument("MagnonOccupation: need at least 2 modes");
  if (static_cast<int>(n_k.size()) != mode_count)
    throw std::invalid_argument("MagnonOccupation: n_k size mismatch");
  if (n_k0 < 0.0)
    throw std::invalid_argument("MagnonOccupation: populations must be >= 0");
  for (double n : n_k) {
    if (n < 0.0)
      throw std::invalid_argument("MagnonOccupation: populations must be >= 0");
  }
}

double lattice_sum(int n_modes, double r_sites) {
  if (n_modes < 1) throw std::invalid_argument("lattice_sum: N must be >= 1");
  double sum = 0.0;
  for (int n = 1; n <= n_modes; ++n) {
    const double k = n * std::numbers::pi / n_modes;
    sum += std::cos(k * r_sites) / (std::cos(k) - 1.0);
  }
  return sum;
}

double w_ij_general(const MagnonOccupation& occ,
                    std::span<const double> mode_energies_hz,
                    const HyperfineParameters& hf, double r_ij_sites) {
  occ.validate();
  if (mode_energies_hz.size() != static_cast<size_t>(occ.grid_size())) {
    throw std::invalid_argument("w_ij_general: energy grid size mismatch");
  }
  const int m = occ.grid_size();
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double n_i = occ.population(i);
    const double k_i = occ.wavenumber(i);
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double denom = mode_energies_hz[j] - mode_energies_hz[i];
      if (denom == 0.0) {
        throw std::domain_error(
            "w_ij_general: degenerate magnon modes (equal energies at "
            "distinct wavenumbers)");
      }
      sum += (n_i - occ.population(j)) / denom *
             std::cos((k_i - occ.wavenumber(j)) * r_ij_sites);
    }
  }
  const double pref = coupling_prefactor_hz(hf) / occ.mode_count;
  return pref * pref * sum;
}

double w_ij_general(const MagnonOccupation& occ, const LadderParameters& params,
                    const HyperfineParameters& hf, double r_ij_sites) {
  const auto eps = relative_mode_energies(occ, params);
  return w_ij_general(occ, eps, hf, r_ij_sites);
}

double w_ij_k0(double n0_per_site, const LadderParameters& params,
               const HyperfineParameters& hf, int n_modes, double r_ij_sites) {
  if (n_modes < 2) throw std::invalid_argument("w_ij_k0: N must be >= 2");
  if (n0_per_site < 0.0)
    throw std::invalid_argument("w_ij_k0: n(0)/N must be >= 0");
  const double bandwidth = params.bandwidth_hz();
  if (bandwidth == 0.0) {
    throw std::domain_error(
        "w_ij_k0: zero bandwidth (j1 = 0), coupling undefined: no "
        "propagating magnons");
  }
  const double ga = coupling_prefactor_hz(hf);
  return 2.0 * ga * ga * n0_per_site / (bandwidth * n_modes) *
         lattice_sum(n_modes, r_ij_sites);
}

std::vector<CouplingResult> range_profile(const MagnonOccupation& occ,
                                          const LadderParameters& params,
                                          const HyperfineParameters& hf,
                                          int r_max_sites) {
  if (r_max_sites < 1)
    throw std::invalid_argument("range_profile: r_max must be >= 1");
  const auto eps = relative_mode_energies(occ, params);
  std::vector<CouplingResult> table;
  table.reserve(r_max_sites + 1);
  for (int r = 0; r <= r_max_sites; ++r) {
    table.push_back({w_ij_general(occ, eps, hf, r), static_cast<double>(r),
                     CouplingProvenance::general});
  }
  return table;
}

double chi_q(const MagnonOccupation& occ, const LadderParameters& params,
             double q) {
  occ.validate();
  const int n = occ.mode_count;
  const double step = std::numbers::pi / n;
  const double m_real = q / step;
  const int m = static_cast<int>(std::lround(m_real));
  if (std::abs(m_real - m) > 1e-9 || std::abs(m) > n) {
    throw std::invalid_argument("chi_q: q must lie on the grid m*pi/N");
  }
  if (m == 0) {
    throw std::invalid_argument("chi_q: q = 0 excluded (k != k' constraint)");
  }
  const auto eps = relative_mode_energies(occ, params);
  double sum = 0.0;
  for (int i = 0; i < occ.grid_size(); ++i) {
    const int j = i + m;
    if (j < 0 || j >= occ.grid_size()) continue;  // pair off the grid
    const double denom = eps[j] - eps[i];
    if (denom == 0.0) {
      throw std::domain_error("chi_q: degenerate magnon modes");
    }
    sum += (occ.population(i) - occ.population(j)) / denom;
  }
  return sum / n;
}

double range_from_susceptibility(const MagnonOccupation& occ,
                                 const LadderParameters& params,
                                 const HyperfineParameters& hf,
                                 double r_ij_sites) {
  const int n = occ.mode_count;
  const double step = std::numbers::pi / n;
  double sum = 0.0;
  for (int m = -n; m <= n; ++m) {
    if (m == 0) continue;
    sum += chi_q(occ, params, m * step) * std::cos(m * step * r_ij_sites);
  }
  const double ga = coupling_prefactor_hz(hf);
  return ga * ga / n * sum;
}

MagnonOccupation thermal_occupation(const LadderParameters& params,
                                    double temperature_k, int n_modes,
                                    double gap_reference_hz) {
  if (!(temperature_k > 0.0))
    throw std::invalid_argument("thermal_occupation: T must be > 0");
  if (n_modes < 2)
    throw std::invalid_argument("thermal_occupation: N must be >= 2");
  // band bottom sits 2B below the k = 0 mode
  if (!(gap_reference_hz - 2.0 * params.bandwidth_hz() > 0.0)) {
    throw std::domain_error(
        "thermal_occupation: gapless input (reference gap does not clear the "
        "band bottom)");
  }
  const double thermal_hz = kelvin_to_hz(temperature_k);
  MagnonOccupation occ;
  occ.mode_count = n_modes;
  occ.n_k.assign(n_modes, 0.0);
  for (int i = 0; i < occ.grid_size(); ++i) {
    const double eps_abs =
        gap_reference_hz + magnon_dispersion(params, occ.wavenumber(i));
    const double n = 1.0 / std::expm1(eps_abs / thermal_hz);
    if (i == 0) {
      occ.n_k0 = n;
    } else {
      occ.n_k[i - 1] = n;
    }
  }
  return occ;
}

}  // namespace spinqc
