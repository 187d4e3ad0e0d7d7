#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

namespace spinqc {

// Basis order |control target> : index = 2*c + t, with 0 = spin up (+Z).
// Spin operators are I = sigma/2, so I_z|0> = +1/2|0>.

enum class Axis { plus_x, minus_x, plus_y, minus_y };

/// In-plane axis angle: +X -> 0, +Y -> pi/2, -X -> pi, -Y -> 3pi/2.
double axis_angle(Axis axis);

struct TwoQubitState {
  Eigen::Vector4cd amp = Eigen::Vector4cd::Zero();

  static TwoQubitState basis(int control, int target);
  static TwoQubitState from_amplitudes(std::complex<double> a00,
                                       std::complex<double> a01,
                                       std::complex<double> a10,
                                       std::complex<double> a11);

  std::array<double, 4> populations() const;
  double norm() const { return amp.norm(); }
  /// off-diagonal <0|rho_target|1> of the reduced target state
  std::complex<double> target_coherence() const;
};

// Density representation for mixed states produced by the relaxation
// channel. Pure-path simulations never need it.
struct TwoQubitDensity {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();

  static TwoQubitDensity from_state(const TwoQubitState& s);

  std::array<double, 4> populations() const;
  double trace() const { return rho.trace().real(); }
  double purity() const { return (rho * rho).trace().real(); }
  /// purity of the reduced single-qubit state, qubit 0 = control
  double reduced_purity(int qubit) const;
};

/// exp(-i*angle*sigma_axis/2) on the addressed qubit (0 = control,
/// 1 = target); right-handed Bloch rotation about the named axis.
TwoQubitState apply_rotation(const TwoQubitState& s, int qubit, Axis axis,
                             double angle_rad);
TwoQubitDensity apply_rotation(const TwoQubitDensity& d, int qubit, Axis axis,
                               double angle_rad);

/// Rotation about an arbitrary axis in the XY plane at angle phi from +X.
TwoQubitState apply_xy_rotation(const TwoQubitState& s, int qubit,
                                double axis_angle_rad, double angle_rad);
TwoQubitDensity apply_xy_rotation(const TwoQubitDensity& d, int qubit,
                                  double axis_angle_rad, double angle_rad);

/// Diagonal evolution under H/h = w*Iz_c*Iz_t + delta_t*Iz_t for t seconds
/// (frequencies in Hz, phases exp(-i*2pi*E*t)).
TwoQubitState evolve_ising(const TwoQubitState& s, double w_hz,
                           double target_detuning_hz, double t_s);
TwoQubitDensity evolve_ising(const TwoQubitDensity& d, double w_hz,
                             double target_detuning_hz, double t_s);

}  // namespace spinqc
