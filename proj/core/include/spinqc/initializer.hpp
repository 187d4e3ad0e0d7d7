#pragma once

#include <vector>

namespace spinqc {

struct InitializerParameters {
  double omega_n_hz = 0.0;     // nuclear Larmor frequency
  double t_bath_k = 0.0;       // bath temperature
  int n_qubits = 0;            // register size
  double p_e = 0.0;            // electron polarization target in [0, 1]
  double tau_transfer_s = 0.0; // polarization-transfer time constant

  void validate() const;
};

/// Relative fraction of registers in the pure state at thermal
/// equilibrium: (h*omega_n/(2*k_B*T)) * N/2^N, proportionality constant 1.
/// The dyadic N/2^N is computed exactly, so ratios between consecutive N
/// are exact whenever the prefactor is a power of two.
double pure_state_fraction(double omega_n_hz, double t_bath_k, int n_qubits);

/// Optically pumped electron polarization transferred to the nuclei:
/// P_n(t) = P_e*(1 - exp(-t/tau)); held constant after light shutoff.
double polarization_buildup(double p_e, double tau_transfer_s, double t_s);

/// Product-state populations of an N-qubit register with per-qubit
/// up-population (1 + P_n)/2. Returns 2^N populations in basis order.
std::vector<double> initial_register_state(double p_n, int n_qubits);

}  // namespace spinqc
