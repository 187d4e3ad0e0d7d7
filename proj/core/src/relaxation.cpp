#include "spinqc/relaxation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "spinqc/gate.hpp"
#include "spinqc/units.hpp"

namespace spinqc {

double t1_rate(const RelaxationParameters& p) {
  if (!p.chi_sum.has_value()) {
    throw std::domain_error("t1_rate: no susceptibility model (chi_sum unset)");
  }
  if (*p.chi_sum < 0.0)
    throw std::invalid_argument("t1_rate: chi_sum must be >= 0");
  if (!(p.temperature_k > 0.0))
    throw std::invalid_argument("t1_rate: temperature must be > 0");
  if (!(p.g_factor > 0.0))
    throw std::invalid_argument("t1_rate: g must be > 0");
  const double ga = p.gamma_n_hz_per_t * p.a_perp_t_per_mu_b;
  return 2.0 * ga * ga * kelvin_to_hz(p.temperature_k) /
         (p.g_factor * p.g_factor) * (*p.chi_sum);
}

namespace {

// Pauli-coefficient weights of the two-qubit product depolarizing map:
// coefficient of sigma_a (x) sigma_b scales by f^(weight(a)+weight(b)).
Eigen::Matrix2cd pauli(int a) {
  Eigen::Matrix2cd m;
  switch (a) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

TwoQubitDensity apply_relaxation(const TwoQubitDensity& d, double t1_s,
                                 double t_s) {
  if (!(t1_s > 0.0)) throw std::invalid_argument("apply_relaxation: T1 must be > 0");
  if (t_s < 0.0) throw std::invalid_argument("apply_relaxation: t must be >= 0");
  const double f = std::exp(-t_s / t1_s);
  if (f == 1.0) return d;  // identity channel (t = 0 or T1 = infinity)

  TwoQubitDensity out;
  out.rho = Eigen::Matrix4cd::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Eigen::Matrix4cd basis = Eigen::Matrix4cd::Zero();
      const Eigen::Matrix2cd pa = pauli(a);
      const Eigen::Matrix2cd pb = pauli(b);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          basis.block<2, 2>(2 * i, 2 * j) = pa(i, j) * pb;
      const std::complex<double> coeff = (d.rho * basis).trace() / 4.0;
      double scale = 1.0;
      if (a != 0) scale *= f;
      if (b != 0) scale *= f;
      out.rho += coeff * scale * basis;
    }
  }
  return out;
}

double gate_fidelity_vs_noise(const GateParameters& gate, double t1_s) {
  const PulseSequence seq = cnot_sequence(gate);
  if (std::isinf(t1_s)) {
    // identity channel: the noiseless state-vector path is exact
    const auto table = cnot_truth_table(gate);
    return (table[0] + table[1] + table[2] + table[3]) / 4.0;
  }
  RelaxationParameters noise;
  noise.t1_s = t1_s;
  double total = 0.0;
  for (int c = 0; c < 2; ++c) {
    for (int t = 0; t < 2; ++t) {
      const TwoQubitDensity out = run_sequence(
          TwoQubitDensity::from_state(TwoQubitState::basis(c, t)), seq, gate,
          noise);
      const int image = 2 * c + (t ^ c);
      total += out.populations()[image];
    }
  }
  return total / 4.0;
}

double figure_of_merit(double a_par, double a_perp, double shared_scale) {
  if (!(a_par > 0.0))
    throw std::invalid_argument("figure_of_merit: A_par must be > 0");
  if (a_perp == 0.0) {
    return std::numeric_limits<double>::infinity();  // flagged, not thrown
  }
  const double ratio = a_par / a_perp;
  return shared_scale * ratio * ratio;
}

}  // namespace spinqc
