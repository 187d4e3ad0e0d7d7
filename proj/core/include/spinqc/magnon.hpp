#pragma once

#include "spinqc/chain.hpp"

namespace spinqc {

// Microwave drive of the k = 0 triplet mode. The population obeys
// dn/dt = W_ex - n/T_s, so the steady state is n = W_ex*T_s and the
// populations here are per-site fractions n(0)/N_region.
struct ExcitationParameters {
  double w_ex_per_s = 0.0;       // excitation rate, fraction per second
  double t_s_s = 0.0;            // magnon lifetime, seconds
  double kappa_per_s_per_w = 0.0;  // power-to-rate calibration
  double p_mw_w = 0.0;           // microwave power, optional input

  double steady_state() const { return w_ex_per_s * t_s_s; }
  void validate() const;
};

// Spatial window of the driven packet. The packet is confined to the
// region where it is excited (gradient mismatch, no continuum near k = 0);
// there is deliberately no transport operation.
struct MagnonPacket {
  double n0_per_site = 0.0;  // k = 0 population fraction n(0)/N_region
  double x_lo_sites = 0.0;
  double x_hi_sites = 0.0;
  int n_region = 0;          // rungs inside the window
};

/// Closed-form solution of the rate equation:
/// n(t) = W_ex*T_s + (n_init - W_ex*T_s)*exp(-t/T_s).
/// Throws if the result exceeds 1 (drive too strong for a fraction).
double evolve_population(double n_init, const ExcitationParameters& p,
                         double t_s);

/// Window {x : |Delta(x) - omega_mw| <= delta_omega/2} clipped to the
/// chain. Width = delta_omega / (g*(mu_B/h)*|G|) lattice units.
MagnonPacket packet_region(const LadderParameters& params,
                           const FieldProfile& field, double omega_mw_hz,
                           double delta_omega_hz);

/// Linear response model W_ex = kappa * P.
double excitation_rate_from_power(double kappa_per_s_per_w, double p_mw_w);

}  // namespace spinqc
