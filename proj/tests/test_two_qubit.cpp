#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinqc/two_qubit.hpp"
#include "test_helpers.hpp"

using namespace spinqc;

TEST_SUITE("two_qubit") {

TEST_CASE("basis states and populations") {
  const auto s = TwoQubitState::basis(1, 0);
  const auto pops = s.populations();
  CHECK(pops[2] == 1.0);
  CHECK(pops[0] == 0.0);
  CHECK(s.norm() == 1.0);
  CHECK_THROWS_AS(TwoQubitState::basis(2, 0), std::invalid_argument);
}

TEST_CASE("rotations preserve the norm") {
  auto s = TwoQubitState::basis(0, 0);
  for (Axis axis : {Axis::plus_x, Axis::minus_x, Axis::plus_y, Axis::minus_y}) {
    for (double angle : {0.1, std::numbers::pi / 2.0, 2.5}) {
      const auto out = apply_rotation(s, 1, axis, angle);
      CHECK(std::abs(out.norm() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("zero angle is the identity") {
  const auto s = TwoQubitState::from_amplitudes(0.5, 0.5, 0.5, 0.5);
  const auto out = apply_rotation(s, 0, Axis::plus_y, 0.0);
  CHECK((out.amp - s.amp).norm() < 1e-15);
}

TEST_CASE("two quarter turns about -X invert the populations") {
  auto s = TwoQubitState::basis(0, 0);
  s = apply_rotation(s, 1, Axis::minus_x, std::numbers::pi / 2.0);
  s = apply_rotation(s, 1, Axis::minus_x, std::numbers::pi / 2.0);
  const auto pops = s.populations();
  CHECK(pops[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pops[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pi/2 about -X points the Bloch vector to +Y") {
  auto s = TwoQubitState::basis(0, 0);
  s = apply_rotation(s, 1, Axis::minus_x, std::numbers::pi / 2.0);
  // <sigma_y> on the target = 2 Im(conj(a0) a1) with control fixed |0>
  const auto a0 = s.amp(0);
  const auto a1 = s.amp(1);
  CHECK(2.0 * std::imag(std::conj(a0) * a1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ising evolution phases") {
  // control |0>: target precesses at +W/2; control |1>: -W/2
  const double w = 1.0e4;
  const double t = 1.0 / (2.0 * w);  // 90 degrees
  auto plus_y = TwoQubitState::from_amplitudes(1.0 / std::numbers::sqrt2,
                                               std::complex<double>(0.0, 1.0) /
                                                   std::numbers::sqrt2,
                                               0.0, 0.0);
  auto out = evolve_ising(plus_y, w, 0.0, t);
  // expect -X: <sigma_x> = 2 Re(conj(a0) a1) = -1
  CHECK(2.0 * std::real(std::conj(out.amp(0)) * out.amp(1)) ==
        doctest::Approx(-1.0).epsilon(1e-12));

  auto ctrl_down = TwoQubitState::from_amplitudes(
      0.0, 0.0, 1.0 / std::numbers::sqrt2,
      std::complex<double>(0.0, 1.0) / std::numbers::sqrt2);
  out = evolve_ising(ctrl_down, w, 0.0, t);
  CHECK(2.0 * std::real(std::conj(out.amp(2)) * out.amp(3)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evolution semigroup") {
  const auto s = TwoQubitState::from_amplitudes(0.5, 0.5, 0.5, 0.5);
  const auto one = evolve_ising(s, 7.3e3, 1.1e3, 2.0e-4);
  const auto two =
      evolve_ising(evolve_ising(s, 7.3e3, 1.1e3, 1.3e-4), 7.3e3, 1.1e3, 0.7e-4);
  CHECK((one.amp - two.amp).norm() < 1e-12);
}

TEST_CASE("density representation") {
  const auto s = TwoQubitState::from_amplitudes(1.0 / std::numbers::sqrt2, 0.0,
                                                1.0 / std::numbers::sqrt2, 0.0);
  const auto d = TwoQubitDensity::from_state(s);
  CHECK(d.trace() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(d.purity() == doctest::Approx(1.0).epsilon(1e-12));
  // pure product state: both reduced states pure
  CHECK(d.reduced_purity(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.reduced_purity(1) == doctest::Approx(1.0).epsilon(1e-12));

  // unitaries act identically on both representations
  const auto su = apply_rotation(s, 0, Axis::plus_y, 0.7);
  const auto du = apply_rotation(d, 0, Axis::plus_y, 0.7);
  const auto du_ref = TwoQubitDensity::from_state(su);
  CHECK((du.rho - du_ref.rho).norm() < 1e-12);

  const auto se = evolve_ising(s, 5e3, 2e3, 1e-4);
  const auto de = evolve_ising(d, 5e3, 2e3, 1e-4);
  CHECK((de.rho - TwoQubitDensity::from_state(se).rho).norm() < 1e-12);
}

TEST_CASE("bell state reduced purity") {
  const auto bell = TwoQubitState::from_amplitudes(
      1.0 / std::numbers::sqrt2, 0.0, 0.0, 1.0 / std::numbers::sqrt2);
  const auto d = TwoQubitDensity::from_state(bell);
  CHECK(d.purity() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d.reduced_purity(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d.reduced_purity(1) == doctest::Approx(0.5).epsilon(1e-12));
}

}  // TEST_SUITE
