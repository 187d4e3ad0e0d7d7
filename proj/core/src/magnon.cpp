#include "spinqc/magnon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinqc {

void ExcitationParameters::validate() const {
  if (w_ex_per_s < 0.0)
    throw std::invalid_argument("ExcitationParameters: W_ex must be >= 0");
  if (!(t_s_s > 0.0))
    throw std::invalid_argument("ExcitationParameters: T_s must be > 0");
  if (kappa_per_s_per_w < 0.0)
    throw std::invalid_argument("ExcitationParameters: kappa must be >= 0");
  if (steady_state() > 1.0) {
    throw std::invalid_argument(
        "ExcitationParameters: steady state W_ex*T_s exceeds 1 (population is "
        "a per-site fraction)");
  }
}

double evolve_population(double n_init, const ExcitationParameters& p, double t_s) {
  if (n_init < 0.0 || n_init > 1.0)
    throw std::invalid_argument("evolve_population: n_init must be in [0, 1]");
  if (t_s < 0.0) throw std::invalid_argument("evolve_population: t must be >= 0");
  if (!(p.t_s_s > 0.0))
    throw std::invalid_argument("evolve_population: T_s must be > 0");
  const double steady = p.w_ex_per_s * p.t_s_s;
  const double n = steady + (n_init - steady) * std::exp(-t_s / p.t_s_s);
  if (n > 1.0) {
    throw std::domain_error(
        "evolve_population: population fraction exceeds 1 (drive too strong "
        "for the fraction model)");
  }
  return n;
}

MagnonPacket packet_region(const LadderParameters& params,
                           const FieldProfile& field, double omega_mw_hz,
                           double delta_omega_hz) {
  if (!(delta_omega_hz > 0.0))
    throw std::invalid_argument("packet_region: delta_omega must be > 0");
  if (field.degenerate()) {
    throw std::domain_error(
        "packet_region: degenerate addressing (G = 0, window unbounded)");
  }
  // Delta(x) is affine, so the window is an interval around the resonance.
  const double mu_b_h = constants::mu_b_over_h_hz_per_t;
  const double slope = -params.g_factor * mu_b_h * field.gradient_t_per_site;
  const double gap_at_origin =
      params.zero_field_gap_hz() - params.g_factor * mu_b_h * field.h0_t;
  const double center = (omega_mw_hz - gap_at_origin) / slope;
  const double half_width =
      (delta_omega_hz / 2.0) /
      (params.g_factor * mu_b_h * std::abs(field.gradient_t_per_site));

  const double x_lo = std::max(0.0, center - half_width);
  const double x_hi = std::min(field.extent_sites, center + half_width);
  if (!(x_lo < x_hi)) {
    throw std::domain_error(
        "packet_region: magnon window empty (resonance outside chain)");
  }

  MagnonPacket packet;
  packet.x_lo_sites = x_lo;
  packet.x_hi_sites = x_hi;
  // rungs sit on integer positions 0, 1, ..., within [0, extent); boundary
  // rungs within 1e-9 sites of the window edge count as inside
  constexpr double edge_tol = 1e-9;
  const int first = static_cast<int>(std::ceil(x_lo - edge_tol));
  const int last = std::min(static_cast<int>(std::floor(x_hi + edge_tol)),
                            static_cast<int>(std::ceil(field.extent_sites)) - 1);
  packet.n_region = std::max(0, last - first + 1);
  return packet;
}

double excitation_rate_from_power(double kappa_per_s_per_w, double p_mw_w) {
  if (kappa_per_s_per_w < 0.0 || p_mw_w < 0.0) {
    throw std::invalid_argument(
        "excitation_rate_from_power: kappa and P must be >= 0");
  }
  return kappa_per_s_per_w * p_mw_w;
}

}  // namespace spinqc
