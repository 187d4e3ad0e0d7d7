#include <benchmark/benchmark.h>

#include "spinqc/coupling.hpp"
#include "spinqc/gate.hpp"
#include "spinqc/relaxation.hpp"
#include "spinqc/units.hpp"

namespace {

spinqc::LadderParameters ladder() {
  spinqc::LadderParameters p;
  p.j_hz = spinqc::kelvin_to_hz(50.0);
  p.j1 = 0.2;
  p.g_factor = 2.0;
  p.n_chain = 20;
  return p;
}

spinqc::HyperfineParameters hyperfine() {
  spinqc::HyperfineParameters hf;
  hf.a_par_t_per_mu_b = 10.0;
  hf.gamma_n_hz_per_t = 4.3e7;
  return hf;
}

spinqc::GateParameters gate() {
  spinqc::GateParameters g;
  g.w_hz = 1.5e4;
  g.h_tr_t = 0.1;
  g.gamma_n_hz_per_t = 4.3e7;
  return g;
}

void BM_lattice_sum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinqc::lattice_sum(n, n / 2.0));
  }
}
BENCHMARK(BM_lattice_sum)->Arg(20)->Arg(200)->Arg(2000);

void BM_w_ij_general(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = ladder();
  const auto hf = hyperfine();
  const auto occ = spinqc::MagnonOccupation::driven(n, 0.01 * n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinqc::w_ij_general(occ, p, hf, n / 2.0));
  }
}
BENCHMARK(BM_w_ij_general)->Arg(20)->Arg(50)->Arg(200);

void BM_range_profile(benchmark::State& state) {
  const auto p = ladder();
  const auto hf = hyperfine();
  const auto occ = spinqc::MagnonOccupation::driven(20, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinqc::range_profile(occ, p, hf, 20));
  }
}
BENCHMARK(BM_range_profile);

void BM_cnot_truth_table(benchmark::State& state) {
  const auto g = gate();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinqc::cnot_truth_table(g));
  }
}
BENCHMARK(BM_cnot_truth_table);

void BM_noisy_gate_fidelity(benchmark::State& state) {
  const auto g = gate();
  const double t1 = g.resolved_t_gate_s() / 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinqc::gate_fidelity_vs_noise(g, t1));
  }
}
BENCHMARK(BM_noisy_gate_fidelity);

void BM_thermal_occupation(benchmark::State& state) {
  const auto p = ladder();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spinqc::thermal_occupation(p, 4.0, 50, 8.14e11));
  }
}
BENCHMARK(BM_thermal_occupation);

}  // namespace

BENCHMARK_MAIN();
