#pragma once

#include <stdexcept>

// Internal unit system used throughout the library:
//   energies   -> ordinary (non-angular) frequencies in Hz
//   fields     -> tesla
//   times      -> seconds
//   distances  -> lattice constants (sites)
// Gyromagnetic ratios are always stored as gamma/2pi in Hz/T. Any formula
// written with an angular gamma is translated at the formula site.

namespace spinqc {

namespace constants {

// exact SI defining constants
inline constexpr double planck_h_j_s = 6.62607015e-34;
inline constexpr double boltzmann_k_b_j_per_k = 1.380649e-23;
// CODATA 2018
inline constexpr double bohr_magneton_j_per_t = 9.2740100783e-24;

inline constexpr double k_b_over_h_hz_per_k = boltzmann_k_b_j_per_k / planck_h_j_s;
inline constexpr double mu_b_over_h_hz_per_t = bohr_magneton_j_per_t / planck_h_j_s;

}  // namespace constants

struct PhysicalConstants {
  double k_b_over_h_hz_per_k;
  double mu_b_over_h_hz_per_t;
  double h_bar_relative;  // energies are stored as plain frequencies
};

constexpr PhysicalConstants codata_constants() {
  return {constants::k_b_over_h_hz_per_k, constants::mu_b_over_h_hz_per_t, 1.0};
}

/// Energy scale T kelvin expressed as a frequency (Hz). Negative input is
/// allowed; callers validate sign where it matters.
constexpr double kelvin_to_hz(double t_kelvin) {
  return t_kelvin * constants::k_b_over_h_hz_per_k;
}

/// 1 kOe = 0.1 T, exact.
constexpr double kilo_oersted_to_tesla(double h_kilo_oersted) {
  return h_kilo_oersted * 0.1;
}

/// Gyromagnetic ratio quoted in MHz/kOe expressed as gamma/2pi in Hz/T.
constexpr double mhz_per_koe_to_hz_per_t(double gamma_mhz_per_koe) {
  return gamma_mhz_per_koe * 1.0e6 / kilo_oersted_to_tesla(1.0);
}

/// Larmor frequency gamma/2pi * H. A negative field signals an inverted
/// profile fed to the addressing chain and is rejected.
inline double larmor_frequency(double gamma_over_2pi_hz_per_t, double h_tesla) {
  if (h_tesla < 0.0) {
    throw std::invalid_argument("larmor_frequency: negative field");
  }
  return gamma_over_2pi_hz_per_t * h_tesla;
}

}  // namespace spinqc
