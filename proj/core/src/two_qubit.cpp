#include "spinqc/two_qubit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinqc {

namespace {

using complexd = std::complex<double>;

Eigen::Matrix2cd xy_rotation_matrix(double axis_angle_rad, double angle_rad) {
  // exp(-i*angle*(cos(phi)*sx + sin(phi)*sy)/2)
  const double c = std::cos(angle_rad / 2.0);
  const double s = std::sin(angle_rad / 2.0);
  const complexd phase(std::cos(axis_angle_rad), std::sin(axis_angle_rad));
  Eigen::Matrix2cd u;
  u << complexd(c, 0.0), complexd(0.0, -s) * std::conj(phase),
       complexd(0.0, -s) * phase, complexd(c, 0.0);
  return u;
}

Eigen::Matrix4cd embed(const Eigen::Matrix2cd& u, int qubit) {
  if (qubit != 0 && qubit != 1) {
    throw std::invalid_argument("two-qubit ops: qubit index must be 0 or 1");
  }
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  Eigen::Matrix4cd full = Eigen::Matrix4cd::Zero();
  const Eigen::Matrix2cd& a = (qubit == 0) ? u : id;
  const Eigen::Matrix2cd& b = (qubit == 0) ? id : u;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      full.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return full;
}

Eigen::Vector4cd ising_phases(double w_hz, double target_detuning_hz, double t_s) {
  Eigen::Vector4cd ph;
  for (int idx = 0; idx < 4; ++idx) {
    const double m_c = (idx & 2) ? -0.5 : 0.5;
    const double m_t = (idx & 1) ? -0.5 : 0.5;
    const double freq = w_hz * m_c * m_t + target_detuning_hz * m_t;
    const double arg = -2.0 * std::numbers::pi * freq * t_s;
    ph(idx) = complexd(std::cos(arg), std::sin(arg));
  }
  return ph;
}

}  // namespace

double axis_angle(Axis axis) {
  switch (axis) {
    case Axis::plus_x: return 0.0;
    case Axis::plus_y: return std::numbers::pi / 2.0;
    case Axis::minus_x: return std::numbers::pi;
    case Axis::minus_y: return 3.0 * std::numbers::pi / 2.0;
  }
  throw std::invalid_argument("axis_angle: unknown axis");
}

TwoQubitState TwoQubitState::basis(int control, int target) {
  if ((control != 0 && control != 1) || (target != 0 && target != 1)) {
    throw std::invalid_argument("TwoQubitState::basis: labels must be 0 or 1");
  }
  TwoQubitState s;
  s.amp(2 * control + target) = 1.0;
  return s;
}

TwoQubitState TwoQubitState::from_amplitudes(std::complex<double> a00,
                                             std::complex<double> a01,
                                             std::complex<double> a10,
                                             std::complex<double> a11) {
  TwoQubitState s;
  s.amp << a00, a01, a10, a11;
  return s;
}

std::array<double, 4> TwoQubitState::populations() const {
  return {std::norm(amp(0)), std::norm(amp(1)), std::norm(amp(2)),
          std::norm(amp(3))};
}

std::complex<double> TwoQubitState::target_coherence() const {
  // <0|rho_t|1> = sum_c a_{c0} * conj(a_{c1})
  return amp(0) * std::conj(amp(1)) + amp(2) * std::conj(amp(3));
}

TwoQubitDensity TwoQubitDensity::from_state(const TwoQubitState& s) {
  TwoQubitDensity d;
  d.rho = s.amp * s.amp.adjoint();
  return d;
}

std::array<double, 4> TwoQubitDensity::populations() const {
  return {rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(),
          rho(3, 3).real()};
}

double TwoQubitDensity::reduced_purity(int qubit) const {
  Eigen::Matrix2cd red = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int other = 0; other < 2; ++other) {
        const int i = (qubit == 0) ? 2 * a + other : 2 * other + a;
        const int j = (qubit == 0) ? 2 * b + other : 2 * other + b;
        red(a, b) += rho(i, j);
      }
    }
  }
  return (red * red).trace().real();
}

TwoQubitState apply_xy_rotation(const TwoQubitState& s, int qubit,
                                double axis_angle_rad, double angle_rad) {
  TwoQubitState out;
  out.amp = embed(xy_rotation_matrix(axis_angle_rad, angle_rad), qubit) * s.amp;
  return out;
}

TwoQubitDensity apply_xy_rotation(const TwoQubitDensity& d, int qubit,
                                  double axis_angle_rad, double angle_rad) {
  const Eigen::Matrix4cd u =
      embed(xy_rotation_matrix(axis_angle_rad, angle_rad), qubit);
  TwoQubitDensity out;
  out.rho = u * d.rho * u.adjoint();
  return out;
}

TwoQubitState apply_rotation(const TwoQubitState& s, int qubit, Axis axis,
                             double angle_rad) {
  return apply_xy_rotation(s, qubit, axis_angle(axis), angle_rad);
}

TwoQubitDensity apply_rotation(const TwoQubitDensity& d, int qubit, Axis axis,
                               double angle_rad) {
  return apply_xy_rotation(d, qubit, axis_angle(axis), angle_rad);
}

TwoQubitState evolve_ising(const TwoQubitState& s, double w_hz,
                           double target_detuning_hz, double t_s) {
  const Eigen::Vector4cd ph = ising_phases(w_hz, target_detuning_hz, t_s);
  TwoQubitState out;
  out.amp = ph.cwiseProduct(s.amp);
  return out;
}

TwoQubitDensity evolve_ising(const TwoQubitDensity& d, double w_hz,
                             double target_detuning_hz, double t_s) {
  const Eigen::Vector4cd ph = ising_phases(w_hz, target_detuning_hz, t_s);
  TwoQubitDensity out;
  out.rho = ph.asDiagonal() * d.rho * ph.conjugate().asDiagonal();
  return out;
}

}  // namespace spinqc
