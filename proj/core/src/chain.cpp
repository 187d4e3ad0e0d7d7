#include "spinqc/chain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinqc {

void LadderParameters::validate() const {
  if (!(j_hz > 0.0)) throw std::invalid_argument("LadderParameters: J must be > 0");
  if (!(j1 >= 0.0 && j1 < 1.0))
    throw std::invalid_argument("LadderParameters: j1 must be in [0, 1)");
  if (n_chain < 2) throw std::invalid_argument("LadderParameters: n_chain must be >= 2");
  if (!(g_factor > 0.0)) throw std::invalid_argument("LadderParameters: g must be > 0");
}

double FieldProfile::field_at(double x_sites) const {
  if (!contains(x_sites)) {
    throw std::out_of_range("FieldProfile: position " + std::to_string(x_sites) +
                            " outside extent [0, " + std::to_string(extent_sites) + ")");
  }
  return h0_t + gradient_t_per_site * x_sites;
}

void FieldProfile::validate() const {
  if (!(extent_sites > 0.0))
    throw std::invalid_argument("FieldProfile: extent must be > 0");
  // affine in x: positivity at both ends covers the whole extent
  if (!(h0_t > 0.0) || !(h0_t + gradient_t_per_site * extent_sites > 0.0)) {
    throw std::invalid_argument("FieldProfile: H(x) must stay > 0 over the extent");
  }
}

void HyperfineParameters::validate() const {
  if (!(a_par_t_per_mu_b > 0.0))
    throw std::invalid_argument("HyperfineParameters: A_par must be > 0");
  if (a_perp_t_per_mu_b < 0.0)
    throw std::invalid_argument("HyperfineParameters: A_perp must be >= 0");
  if (!(gamma_n_hz_per_t > 0.0))
    throw std::invalid_argument("HyperfineParameters: gamma_n must be > 0");
}

void QubitLayout::validate(const FieldProfile& field) const {
  if (spacing < 2) throw std::invalid_argument("QubitLayout: spacing d must be >= 2");
  for (size_t i = 0; i < positions.size(); ++i) {
    if (i > 0 && positions[i] <= positions[i - 1])
      throw std::invalid_argument("QubitLayout: positions must be strictly increasing");
    if (!field.contains(positions[i]))
      throw std::invalid_argument("QubitLayout: position outside field extent");
  }
}

double magnon_dispersion(const LadderParameters& params, double k) {
  if (k < 0.0 || k > std::numbers::pi) {
    throw std::invalid_argument("magnon_dispersion: k must be in [0, pi]");
  }
  return params.bandwidth_hz() * (std::cos(k) - 1.0);
}

double local_gap(const LadderParameters& params, const FieldProfile& field,
                 double x_sites) {
  const double zeeman =
      params.g_factor * constants::mu_b_over_h_hz_per_t * field.field_at(x_sites);
  const double gap = params.zero_field_gap_hz() - zeeman;
  if (!(gap > 0.0)) {
    throw std::domain_error(
        "local_gap: field beyond gap closure at x = " + std::to_string(x_sites) +
        " (singlet ground state assumption fails)");
  }
  return gap;
}

std::array<double, 3> triplet_branch_energies(const LadderParameters& params,
                                              double h_tesla) {
  if (h_tesla < 0.0)
    throw std::invalid_argument("triplet_branch_energies: H must be >= 0");
  const double delta0 = params.zero_field_gap_hz();
  const double zeeman = params.g_factor * constants::mu_b_over_h_hz_per_t * h_tesla;
  return {delta0 + zeeman, delta0, delta0 - zeeman};  // m = +1, 0, -1
}

double resonance_position(const LadderParameters& params,
                          const FieldProfile& field, double omega_mw_hz) {
  if (field.degenerate()) {
    throw std::domain_error(
        "resonance_position: degenerate addressing (G = 0, every position "
        "resonates at the same frequency)");
  }
  const double slope =
      params.g_factor * constants::mu_b_over_h_hz_per_t * field.gradient_t_per_site;
  const double gap_at_origin = params.zero_field_gap_hz() -
                               params.g_factor * constants::mu_b_over_h_hz_per_t * field.h0_t;
  double x = (gap_at_origin - omega_mw_hz) / slope;
  // cancellation of the large gap offset can push a boundary resonance a
  // hair below zero; snap it back
  if (x < 0.0 && x > -1e-9) x = 0.0;
  if (!field.contains(x)) {
    throw std::domain_error("resonance_position: out of chain (x = " +
                            std::to_string(x) + ")");
  }
  return x;
}

double qubit_larmor(const QubitLayout& layout, const FieldProfile& field,
                    const HyperfineParameters& hf, int q) {
  if (q < 0 || static_cast<size_t>(q) >= layout.positions.size()) {
    throw std::out_of_range("qubit_larmor: invalid qubit index " + std::to_string(q));
  }
  return larmor_frequency(hf.gamma_n_hz_per_t, field.field_at(layout.positions[q]));
}

std::vector<double> resolvability_margin(const QubitLayout& layout,
                                         const FieldProfile& field,
                                         const HyperfineParameters& hf,
                                         double linewidth_hz) {
  if (!(linewidth_hz > 0.0))
    throw std::invalid_argument("resolvability_margin: linewidth must be > 0");
  std::vector<double> margins;
  for (size_t i = 0; i + 1 < layout.positions.size(); ++i) {
    const double f0 = qubit_larmor(layout, field, hf, static_cast<int>(i));
    const double f1 = qubit_larmor(layout, field, hf, static_cast<int>(i + 1));
    margins.push_back(std::abs(f1 - f0) / linewidth_hz);
  }
  return margins;
}

}  // namespace spinqc
