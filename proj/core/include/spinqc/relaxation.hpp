#pragma once

#include <optional>

#include "spinqc/two_qubit.hpp"

namespace spinqc {

struct GateParameters;  // gate.hpp

// Magnon-activated nuclear spin-lattice relaxation. The transverse
// susceptibility aggregate sum_q Im chi+-(q, w_n)/w_n of the driven,
// non-equilibrium magnon gas is not derivable from the band model alone;
// it enters as the user-supplied chi_sum and absolute T1 values are
// calibration-dependent. The quadratic A_perp and linear T scalings are
// the load-bearing contracts.
struct RelaxationParameters {
  double a_perp_t_per_mu_b = 0.0;
  double temperature_k = 0.0;
  double g_factor = 2.0;
  double gamma_n_hz_per_t = 0.0;
  std::optional<double> chi_sum = std::nullopt;  // susceptibility aggregate
  double t1_s = 0.0;        // derived from t1_rate or overridden
  double t_s_magnon_s = 0.0;  // magnon lifetime, bookkeeping
};

/// 1/T1 = 2*(gamma_n*A_perp)^2*(k_B*T/h)/g^2 * chi_sum, with
/// gamma_n*A_perp = (gamma_n/2pi)*A_perp in Hz and the mu_B^2 absorbed
/// into the per-mu_B hyperfine units. Throws "no susceptibility model"
/// when chi_sum is unset.
double t1_rate(const RelaxationParameters& p);

/// Independent depolarizing factor exp(-t/T1) per qubit: coherences and
/// longitudinal polarization decay together toward the fully mixed state.
/// Trace-preserving; factors compose as a semigroup. T1 = infinity is the
/// identity channel, returned bit-for-bit.
TwoQubitDensity apply_relaxation(const TwoQubitDensity& d, double t1_s,
                                 double t_s);

/// Mean basis-input c-NOT fidelity with the relaxation channel applied
/// after each timed step. An infinite T1 routes to the noiseless
/// state-vector path (the channel is the identity there). The result
/// depends on T1 and t_gate only through t_gate/T1.
double gate_fidelity_vs_noise(const GateParameters& gate, double t1_s);

/// Q = T1/t_gate up to shared constants: t_gate ~ 1/A_par^2 and
/// 1/T1 ~ A_perp^2, so Q = scale*(A_par/A_perp)^2. A_perp = 0 reports an
/// infinite Q rather than throwing.
double figure_of_merit(double a_par, double a_perp, double shared_scale = 1.0);

}  // namespace spinqc
