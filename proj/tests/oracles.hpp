#pragma once

// Independent test oracles. Everything here is deliberately written against
// the formulas directly, without calling the library paths it checks.

#include <cmath>
#include <numbers>
#include <vector>

namespace oracles {

/// Kahan compensated summation.
inline double compensated_sum(const std::vector<double>& terms) {
  double sum = 0.0;
  double c = 0.0;
  for (double t : terms) {
    const double y = t - c;
    const double s = sum + y;
    c = (s - sum) - y;
    sum = s;
  }
  return sum;
}

/// The explicit range-factor terms cos(k_n r)/(cos k_n - 1), k_n = n*pi/N.
inline std::vector<double> lattice_sum_terms(int n_modes, double r) {
  std::vector<double> terms;
  terms.reserve(n_modes);
  for (int n = 1; n <= n_modes; ++n) {
    const double k = n * std::numbers::pi / n_modes;
    terms.push_back(std::cos(k * r) / (std::cos(k) - 1.0));
  }
  return terms;
}

inline double lattice_sum_compensated(int n_modes, double r) {
  return compensated_sum(lattice_sum_terms(n_modes, r));
}

/// Classic RK4 for the rate equation dn/dt = w - n/tau.
inline double rk4_rate_equation(double n0, double w, double tau, double t,
                                int steps) {
  const double dt = t / steps;
  auto f = [&](double n) { return w - n / tau; };
  double n = n0;
  for (int i = 0; i < steps; ++i) {
    const double k1 = f(n);
    const double k2 = f(n + 0.5 * dt * k1);
    const double k3 = f(n + 0.5 * dt * k2);
    const double k4 = f(n + dt * k3);
    n += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return n;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Golden constants, computed with 40-digit arithmetic from the defining
// formulas before the implementation existed.
namespace golden {

// sum_{n=1..20} cos(n*pi/2)/(cos(n*pi/20) - 1); exactly 33/2
inline constexpr double lattice_sum_20_10 = 16.5;
// sum_{n=1..20} 1/(cos(n*pi/20) - 1); exactly -267/2
inline constexpr double lattice_sum_20_0 = -133.5;
// reference coupling: N = 20, r = 10, A_par = 10 T/mu_B,
// gamma_n/2pi = 4.3e7 Hz/T, J = 50 K, j1 = 0.2, n0/N = 0.01
inline constexpr double headline_w_ij_hz = 14789.6674044236;
// headline divided by the lattice sum
inline constexpr double w_ij_prefactor_hz = 896.343479055974;
// k_B/h and mu_B/h from the exact SI constants
inline constexpr double k_b_over_h_hz_per_k = 2.0836619123327573e10;
inline constexpr double mu_b_over_h_hz_per_t = 1.3996244936072704e10;
// J(1 + j1/4) - g*(mu_B/h)*H at J = 50 K, j1 = 0.2, g = 2, H = 10 T
inline constexpr double local_gap_example_hz = 8.139976052532e11;
// 2*J*(j1 - j1^3/4) at J = 50 K, j1 = 0.2
inline constexpr double full_bandwidth_example_hz = 4.125650586419e11;
// (h*4.3e8/(2 k_B * 1K)) * 10/1024
inline constexpr double pure_fraction_example = 1.00765357497435e-4;
// Bose occupation at eps = k_B*T
inline constexpr double bose_at_unit_ratio = 0.5819767068693265;

}  // namespace golden

}  // namespace oracles
