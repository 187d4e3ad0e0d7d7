#pragma once

#include <array>
#include <vector>

#include "spinqc/units.hpp"

namespace spinqc {

// Two-leg spin ladder with rung exchange J and leg exchange J1 = j1*J.
// The singlet-triplet subspace of each rung maps onto an effective spin;
// the lowest triplet branch disperses as eps(k) = C + J*(j1 - j1^3/4)*cos(k).
// Only energy differences eps(k) - eps(0) are ever exposed: the constant C
// cancels in every downstream formula.
struct LadderParameters {
  double j_hz = 0.0;         // rung exchange, Hz
  double j1 = 0.0;           // leg/rung ratio J1/J, dimensionless
  double g_factor = 2.0;     // electron g-factor
  int n_chain = 0;           // total rung count
  double lattice_a_m = 0.0;  // lattice constant, metadata only

  /// Dispersion bandwidth coefficient B = J*(j1 - j1^3/4).
  double bandwidth_hz() const { return j_hz * (j1 - j1 * j1 * j1 / 4.0); }

  /// Singlet-triplet gap at zero field, J*(1 + j1/4).
  double zero_field_gap_hz() const { return j_hz * (1.0 + j1 / 4.0); }

  void validate() const;
};

// Linear field map H(x) = H0 + G*x over the chain extent [0, n_chain).
struct FieldProfile {
  double h0_t = 0.0;                // field at chain origin, T
  double gradient_t_per_site = 0.0; // G, T per lattice constant
  double extent_sites = 0.0;        // valid positions are [0, extent)

  double field_at(double x_sites) const;
  bool contains(double x_sites) const {
    return x_sites >= 0.0 && x_sites < extent_sites;
  }
  /// G = 0 is allowed but removes position addressing.
  bool degenerate() const { return gradient_t_per_site == 0.0; }

  void validate() const;
};

struct HyperfineParameters {
  double a_par_t_per_mu_b = 0.0;   // longitudinal hyperfine field, T per mu_B
  double a_perp_t_per_mu_b = 0.0;  // transverse hyperfine field, T per mu_B
  double gamma_n_hz_per_t = 0.0;   // nuclear gamma/2pi, Hz/T

  void validate() const;
};

// Qubit nuclei sit on integer rungs, spaced far enough apart that direct
// dipole couplings are negligible and NMR lines stay resolvable.
struct QubitLayout {
  std::vector<int> positions;  // strictly increasing, lattice units
  int spacing = 0;             // typical inter-qubit distance d >= 2

  void validate(const FieldProfile& field) const;
};

/// Band energy relative to the k = 0 mode: eps(k) - eps(0) =
/// J*(j1 - j1^3/4)*(cos k - 1), for k in [0, pi]. Nonpositive everywhere,
/// zero only at k = 0.
double magnon_dispersion(const LadderParameters& params, double k);

/// Local |00> -> |1,-1> excitation energy Delta(x) = J*(1 + j1/4)
/// - g*(mu_B/h)*H(x). Throws if the field has closed the gap at x.
double local_gap(const LadderParameters& params, const FieldProfile& field,
                 double x_sites);

/// k = 0 triplet branch energies for m = +1, 0, -1 in a uniform field H:
/// Delta0 + m*g*(mu_B/h)*H. Degenerate at H = 0.
std::array<double, 3> triplet_branch_energies(const LadderParameters& params,
                                              double h_tesla);

/// Inverse of local_gap along the chain: the unique x with
/// Delta(x) = omega_mw. Throws "degenerate addressing" when G = 0 and
/// "out of chain" when the solution leaves the extent.
double resonance_position(const LadderParameters& params,
                          const FieldProfile& field, double omega_mw_hz);

/// NMR frequency of qubit q: gamma_n/2pi * H(x_q).
double qubit_larmor(const QubitLayout& layout, const FieldProfile& field,
                    const HyperfineParameters& hf, int q);

/// (adjacent-qubit Larmor separation)/linewidth for each adjacent pair;
/// > 1 means the pair is resolvable in the frequency domain.
std::vector<double> resolvability_margin(const QubitLayout& layout,
                                         const FieldProfile& field,
                                         const HyperfineParameters& hf,
                                         double linewidth_hz);

}  // namespace spinqc
