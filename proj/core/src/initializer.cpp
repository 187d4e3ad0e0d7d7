#include "spinqc/initializer.hpp"

#include <cmath>
#include <stdexcept>

#include "spinqc/units.hpp"

namespace spinqc {

void InitializerParameters::validate() const {
  if (!(omega_n_hz > 0.0))
    throw std::invalid_argument("InitializerParameters: omega_n must be > 0");
  if (!(t_bath_k > 0.0))
    throw std::invalid_argument("InitializerParameters: T_bath must be > 0");
  if (n_qubits < 1)
    throw std::invalid_argument("InitializerParameters: N_qubits must be >= 1");
  if (p_e < 0.0 || p_e > 1.0)
    throw std::invalid_argument("InitializerParameters: P_e must be in [0, 1]");
  if (!(tau_transfer_s > 0.0))
    throw std::invalid_argument("InitializerParameters: tau_transfer must be > 0");
}

double pure_state_fraction(double omega_n_hz, double t_bath_k, int n_qubits) {
  if (n_qubits < 1)
    throw std::invalid_argument("pure_state_fraction: N must be >= 1");
  // h*omega/(2 k_B T) in internal units is omega/(2 * kelvin_to_hz(T));
  // N/2^N is an exact dyadic, multiplied in last so the prefactor rounds
  // identically for every N.
  const double prefactor = omega_n_hz / (2.0 * kelvin_to_hz(t_bath_k));
  const double dyadic = std::ldexp(static_cast<double>(n_qubits), -n_qubits);
  return prefactor * dyadic;
}

double polarization_buildup(double p_e, double tau_transfer_s, double t_s) {
  if (p_e < 0.0 || p_e > 1.0)
    throw std::invalid_argument("polarization_buildup: P_e must be in [0, 1]");
  if (!(tau_transfer_s > 0.0))
    throw std::invalid_argument("polarization_buildup: tau must be > 0");
  if (t_s < 0.0)
    throw std::invalid_argument("polarization_buildup: t must be >= 0");
  return p_e * (-std::expm1(-t_s / tau_transfer_s));
}

std::vector<double> initial_register_state(double p_n, int n_qubits) {
  if (p_n < 0.0 || p_n > 1.0)
    throw std::invalid_argument("initial_register_state: P_n must be in [0, 1]");
  if (n_qubits < 1 || n_qubits > 24) {
    throw std::invalid_argument(
        "initial_register_state: N must be in [1, 24] (2^N populations)");
  }
  const double up = (1.0 + p_n) / 2.0;
  const double down = 1.0 - up;
  std::vector<double> populations(size_t{1} << n_qubits, 1.0);
  for (size_t idx = 0; idx < populations.size(); ++idx) {
    for (int q = 0; q < n_qubits; ++q) {
      const bool bit = (idx >> (n_qubits - 1 - q)) & 1;
      populations[idx] *= bit ? down : up;
    }
  }
  return populations;
}

}  // namespace spinqc
