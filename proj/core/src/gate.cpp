#include "spinqc/gate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spinqc/relaxation.hpp"

namespace spinqc {

double GateParameters::resolved_t_gate_s() const {
  if (t_gate_s > 0.0) return t_gate_s;
  if (w_hz == 0.0) {
    throw std::domain_error("GateParameters: gate not switchable (W = 0)");
  }
  return 1.0 / (2.0 * std::abs(w_hz));
}

double GateParameters::target_detuning_hz() const {
  return frame == Frame::bare ? gamma_n_hz_per_t * h_tr_t : 0.0;
}

PulseStep PulseStep::rotation(int qubit, Axis axis, double angle_rad) {
  PulseStep s;
  s.kind = Kind::rotation;
  s.qubit = qubit;
  s.axis = axis;
  s.angle_rad = angle_rad;
  return s;
}

PulseStep PulseStep::coupled_evolution(double duration_s) {
  PulseStep s;
  s.kind = Kind::coupled_evolution;
  s.duration_s = duration_s;
  return s;
}

PulseStep PulseStep::idle(double duration_s) {
  PulseStep s;
  s.kind = Kind::idle;
  s.duration_s = duration_s;
  return s;
}

double PulseSequence::total_duration_s() const {
  double t = 0.0;
  for (const auto& s : steps) t += s.duration_s;
  return t;
}

TwoQubitState evolve_coupled(const TwoQubitState& s, const GateParameters& p,
                             double t_s) {
  return evolve_ising(s, p.w_hz, p.target_detuning_hz(), t_s);
}

PulseSequence cnot_sequence(const GateParameters& p) {
  if (p.w_hz == 0.0) {
    throw std::domain_error("cnot_sequence: gate not switchable (W = 0)");
  }
  constexpr int target = 1;
  PulseSequence seq;
  seq.steps = {
      PulseStep::rotation(target, Axis::minus_x, std::numbers::pi / 2.0),
      PulseStep::coupled_evolution(p.resolved_t_gate_s()),
      PulseStep::rotation(target, p.second_pulse_axis, std::numbers::pi / 2.0),
  };
  return seq;
}

namespace {

// Rotation axes are specified in the shifted frame of the target, the only
// qubit whose reference the triplet shift moves. Representing a target
// pulse in the bare frame conjugates its axis by the accumulated frame
// phase 2pi*delta_t*t; control pulses are frame-independent.
double frame_axis_correction(const GateParameters& p, int qubit,
                             double elapsed_s) {
  if (p.frame != Frame::bare || qubit != 1) return 0.0;
  return 2.0 * std::numbers::pi * p.gamma_n_hz_per_t * p.h_tr_t * elapsed_s;
}

// Idle windows have the microwave (and hence H_tr) off: free evolution is
// the identity in the bare frame and a -delta_t detuning in the shifted
// frame, whose reference keeps rotating at the shifted frequency.
double idle_detuning_hz(const GateParameters& p) {
  if (p.frame == Frame::bare) return 0.0;
  return -p.gamma_n_hz_per_t * p.h_tr_t;
}

}  // namespace

TwoQubitState run_sequence(const TwoQubitState& s, const PulseSequence& seq,
                           const GateParameters& p) {
  TwoQubitState state = s;
  double elapsed = 0.0;
  for (const auto& step : seq.steps) {
    switch (step.kind) {
      case PulseStep::Kind::rotation:
        state = apply_xy_rotation(
            state, step.qubit,
            axis_angle(step.axis) +
                frame_axis_correction(p, step.qubit, elapsed),
            step.angle_rad);
        break;
      case PulseStep::Kind::coupled_evolution:
        state = evolve_coupled(state, p, step.duration_s);
        elapsed += step.duration_s;
        break;
      case PulseStep::Kind::idle:
        state = evolve_ising(state, 0.0, idle_detuning_hz(p), step.duration_s);
        elapsed += step.duration_s;
        break;
    }
  }
  return state;
}

TwoQubitDensity run_sequence(const TwoQubitDensity& d, const PulseSequence& seq,
                             const GateParameters& p,
                             const RelaxationParameters& noise) {
  TwoQubitDensity state = d;
  double elapsed = 0.0;
  for (const auto& step : seq.steps) {
    switch (step.kind) {
      case PulseStep::Kind::rotation:
        state = apply_xy_rotation(
            state, step.qubit,
            axis_angle(step.axis) +
                frame_axis_correction(p, step.qubit, elapsed),
            step.angle_rad);
        break;
      case PulseStep::Kind::coupled_evolution:
        state = evolve_ising(state, p.w_hz, p.target_detuning_hz(),
                             step.duration_s);
        elapsed += step.duration_s;
        state = apply_relaxation(state, noise.t1_s, step.duration_s);
        break;
      case PulseStep::Kind::idle:
        state = evolve_ising(state, 0.0, idle_detuning_hz(p), step.duration_s);
        elapsed += step.duration_s;
        state = apply_relaxation(state, noise.t1_s, step.duration_s);
        break;
    }
  }
  return state;
}

std::array<double, 4> cnot_truth_table(const GateParameters& p) {
  const PulseSequence seq = cnot_sequence(p);
  std::array<double, 4> fidelities{};
  for (int c = 0; c < 2; ++c) {
    for (int t = 0; t < 2; ++t) {
      const TwoQubitState out =
          run_sequence(TwoQubitState::basis(c, t), seq, p);
      const int image = 2 * c + (t ^ c);
      fidelities[2 * c + t] = out.populations()[image];
    }
  }
  return fidelities;
}

double h_tr_shift(const HyperfineParameters& hf, double n0_fraction,
                  double m_eff_mu_b) {
  if (n0_fraction < 0.0 || n0_fraction > 1.0) {
    throw std::invalid_argument("h_tr_shift: n0 must be in [0, 1]");
  }
  return hf.a_par_t_per_mu_b * n0_fraction * m_eff_mu_b;
}

double measure_h_tr_protocol(const GateParameters& p) {
  if (!(p.gamma_n_hz_per_t > 0.0)) {
    throw std::invalid_argument("measure_h_tr_protocol: gamma_n must be > 0");
  }
  // Saturating the control forces <Iz_c> = 0, so the conditional term is
  // absent from the target precession. The W dependence is multiplied out
  // rather than dropped, keeping the code path identical.
  GateParameters saturated = p;
  saturated.w_hz = p.w_hz * 0.0;
  saturated.frame = Frame::bare;

  const double delta_hz = p.gamma_n_hz_per_t * p.h_tr_t;  // expected offset
  const int n_samples = 64;
  // keep per-sample phase advance well inside (-pi, pi) for unwrapping
  const double dt =
      delta_hz != 0.0 ? 1.0 / (16.0 * std::abs(delta_hz)) : 1.0e-6;

  TwoQubitState init = TwoQubitState::from_amplitudes(
      1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2, 0.0, 0.0);

  std::vector<double> phase(n_samples, 0.0);
  std::complex<double> prev = init.target_coherence();
  double accumulated = 0.0;
  for (int j = 1; j < n_samples; ++j) {
    const TwoQubitState s = evolve_coupled(init, saturated, j * dt);
    const std::complex<double> c = s.target_coherence();
    accumulated += std::arg(c * std::conj(prev));
    phase[j] = accumulated;
    prev = c;
  }

  // least-squares slope of the unwrapped phase against time
  double t_mean = 0.0, p_mean = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    t_mean += j * dt;
    p_mean += phase[j];
  }
  t_mean /= n_samples;
  p_mean /= n_samples;
  double num = 0.0, den = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double dt_j = j * dt - t_mean;
    num += dt_j * (phase[j] - p_mean);
    den += dt_j * dt_j;
  }
  const double slope = num / den;
  const double observed_offset_hz = -slope / (2.0 * std::numbers::pi);
  return observed_offset_hz / p.gamma_n_hz_per_t;
}

}  // namespace spinqc
