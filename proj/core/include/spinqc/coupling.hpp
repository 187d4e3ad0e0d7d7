#pragma once

#include <span>
#include <vector>

#include "spinqc/chain.hpp"

namespace spinqc {

// Mode populations on the grid {k = 0} + {k_n = n*pi/N, n = 1..N}.
// A microwave-driven packet populates only the k = 0 mode; thermal
// occupations follow the Bose function of the absolute mode energy.
struct MagnonOccupation {
  int mode_count = 0;        // N
  double n_k0 = 0.0;         // k = 0 population (count, not per-site)
  std::vector<double> n_k;   // n = 1..N

  static MagnonOccupation driven(int n_modes, double n0_count);
  static MagnonOccupation uniform(int n_modes, double n_each);

  int grid_size() const { return mode_count + 1; }
  /// grid index 0 is the k = 0 mode
  double population(int grid_index) const;
  double wavenumber(int grid_index) const;

  void validate() const;
};

enum class CouplingProvenance { general, reduced };

struct CouplingResult {
  double w_ij_hz = 0.0;
  double r_ij_sites = 0.0;
  CouplingProvenance provenance = CouplingProvenance::general;
};

/// The dimensionless range factor sum_{n=1..N} cos(k_n*r)/(cos(k_n) - 1)
/// with k_n = n*pi/N. Every denominator is strictly negative on (0, pi],
/// so there is no singularity.
double lattice_sum(int n_modes, double r_sites);

/// Magnon-exchange nuclear coupling, general double sum over the mode grid:
///   W_ij = (gamma_n*A_par/N)^2 * sum_{k != k'} (n_k - n_k')/(eps_k' - eps_k)
///          * cos((k - k')*r_ij)
/// with gamma_n*A_par = (gamma_n/2pi)*A_par in Hz and mode energies in Hz.
double w_ij_general(const MagnonOccupation& occ, const LadderParameters& params,
                    const HyperfineParameters& hf, double r_ij_sites);

/// Same sum with caller-supplied mode energies (size grid_size(), index 0 is
/// the k = 0 mode). Guards against degenerate pairs eps_k == eps_k', which
/// cannot occur for the cos band but can for arbitrary dispersions.
double w_ij_general(const MagnonOccupation& occ,
                    std::span<const double> mode_energies_hz,
                    const HyperfineParameters& hf, double r_ij_sites);

/// Reduced formula for a packet driven at k = 0 only:
///   W_ij = 2*(gamma_n*A_par)^2*(n0/N) / (J*(j1 - j1^3/4)*N) * lattice_sum.
/// n(0) = 0 switches the coupling off exactly. Throws on j1 = 0 (zero
/// bandwidth, no propagating magnons).
double w_ij_k0(double n0_per_site, const LadderParameters& params,
               const HyperfineParameters& hf, int n_modes, double r_ij_sites);

/// Tabulates W(r) for r = 0..r_max via the general sum.
std::vector<CouplingResult> range_profile(const MagnonOccupation& occ,
                                          const LadderParameters& params,
                                          const HyperfineParameters& hf,
                                          int r_max_sites);

/// Zero-energy generalized susceptibility on the difference grid
/// q = m*pi/N, m != 0:
///   chi(q) = (1/N) * sum_k (n_k - n_{k+q})/(eps_{k+q} - eps_k),
/// pairs with k+q outside the grid skipped. The remaining 1/N of the
/// double-sum normalization lives in range_from_susceptibility.
double chi_q(const MagnonOccupation& occ, const LadderParameters& params,
             double q);

/// Range function rebuilt from chi(q):
///   W(r) = (gamma_n*A_par)^2/N * sum_q chi(q)*cos(q*r).
/// Agrees with w_ij_general by construction; kept as the independent
/// algebraic route for cross-checks.
double range_from_susceptibility(const MagnonOccupation& occ,
                                 const LadderParameters& params,
                                 const HyperfineParameters& hf,
                                 double r_ij_sites);

/// Equilibrium Bose populations n_k = 1/(exp(eps_abs(k)*h/(k_B*T)) - 1)
/// with eps_abs(k) = gap_reference + (eps(k) - eps(0)). The reference gap
/// is the local singlet-triplet gap of the region being compared. Throws
/// if the band bottom gap_reference - 2B is not positive.
MagnonOccupation thermal_occupation(const LadderParameters& params,
                                    double temperature_k, int n_modes,
                                    double gap_reference_hz);

}  // namespace spinqc
