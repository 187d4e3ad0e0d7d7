#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "spinqc/initializer.hpp"
#include "spinqc/units.hpp"
#include "test_helpers.hpp"

using namespace spinqc;

TEST_SUITE("initializer") {

TEST_CASE("pure_state_fraction") {
  SUBCASE("reference point") {
    const double f = pure_state_fraction(4.3e8, 1.0, 10);
    CHECK(oracles::rel_diff(f, oracles::golden::pure_fraction_example) < 1e-12);
    CHECK(oracles::rel_diff(f, 1.0e-4) < 1e-2);
  }

  SUBCASE("f(1) = f(2) for any parameters") {
    CHECK(pure_state_fraction(4.3e8, 1.0, 1) == pure_state_fraction(4.3e8, 1.0, 2));
    CHECK(pure_state_fraction(7.7e7, 0.3, 1) == pure_state_fraction(7.7e7, 0.3, 2));
  }

  SUBCASE("consecutive ratio (N+1)/(2N)") {
    // with a power-of-two prefactor the dyadic ratio is exact in floating
    // point; generic parameters agree to rounding
    const double omega_exact = 2.0 * constants::k_b_over_h_hz_per_k;
    for (int n = 1; n <= 20; ++n) {
      const double ratio = pure_state_fraction(omega_exact, 1.0, n + 1) /
                           pure_state_fraction(omega_exact, 1.0, n);
      CHECK(ratio == static_cast<double>(n + 1) / (2.0 * n));
    }
    for (int n = 1; n <= 20; ++n) {
      const double ratio = pure_state_fraction(4.3e8, 1.0, n + 1) /
                           pure_state_fraction(4.3e8, 1.0, n);
      CHECK(oracles::rel_diff(ratio, static_cast<double>(n + 1) / (2.0 * n)) <
            1e-15);
    }
  }

  SUBCASE("strictly decreasing beyond N = 2") {
    double prev = pure_state_fraction(4.3e8, 1.0, 2);
    for (int n = 3; n <= 30; ++n) {
      const double f = pure_state_fraction(4.3e8, 1.0, n);
      CHECK(f < prev);
      prev = f;
    }
  }

  SUBCASE("linear in omega_n and in 1/T") {
    const double base = pure_state_fraction(1e8, 2.0, 5);
    CHECK(oracles::rel_diff(pure_state_fraction(3e8, 2.0, 5), 3.0 * base) < 1e-15);
    CHECK(oracles::rel_diff(pure_state_fraction(1e8, 1.0, 5), 2.0 * base) < 1e-15);
  }

  CHECK_THROWS_AS(pure_state_fraction(4.3e8, 1.0, 0), std::invalid_argument);
}

TEST_CASE("polarization_buildup") {
  CHECK(polarization_buildup(0.8, 2.0, 0.0) == 0.0);
  CHECK(oracles::rel_diff(polarization_buildup(0.8, 2.0, 1e3), 0.8) < 1e-14);
  CHECK(oracles::rel_diff(polarization_buildup(0.8, 2.0, 2.0),
                          0.8 * (1.0 - std::exp(-1.0))) < 1e-14);

  // monotone nondecreasing, bounded by P_e
  double prev = -1.0;
  for (int i = 0; i <= 50; ++i) {
    const double p = polarization_buildup(0.6, 1.5, 0.3 * i);
    CHECK(p >= prev);
    CHECK(p <= 0.6);
    prev = p;
  }

  CHECK_THROWS_AS(polarization_buildup(1.2, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(polarization_buildup(0.5, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(polarization_buildup(0.5, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("initial_register_state") {
  SUBCASE("full polarization is the pure all-up register") {
    const auto pops = initial_register_state(1.0, 3);
    CHECK(pops[0] == 1.0);
    for (size_t i = 1; i < pops.size(); ++i) CHECK(pops[i] == 0.0);
  }

  SUBCASE("zero polarization is fully mixed") {
    const auto pops = initial_register_state(0.0, 2);
    for (double p : pops) CHECK(p == 0.25);
  }

  SUBCASE("product populations at P_n = 0.5, N = 2") {
    const auto pops = initial_register_state(0.5, 2);
    REQUIRE(pops.size() == 4);
    CHECK(pops[0] == 0.5625);
    CHECK(pops[1] == 0.1875);
    CHECK(pops[2] == 0.1875);
    CHECK(pops[3] == 0.0625);
  }

  SUBCASE("populations sum to one") {
    for (double p_n : {0.1, 0.37, 0.9}) {
      for (int n : {1, 2, 5, 10}) {
        const auto pops = initial_register_state(p_n, n);
        const double total = std::accumulate(pops.begin(), pops.end(), 0.0);
        CHECK(std::abs(total - 1.0) < 1e-12);
      }
    }
  }

  CHECK_THROWS_AS(initial_register_state(-0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(initial_register_state(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(initial_register_state(0.5, 30), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  InitializerParameters p;
  p.omega_n_hz = 4.3e8;
  p.t_bath_k = 1.0;
  p.n_qubits = 10;
  p.p_e = 1.0;
  p.tau_transfer_s = 1.0;
  CHECK_NOTHROW(p.validate());
  p.p_e = 1.5;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

}  // TEST_SUITE
