#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spinqc/units.hpp"
#include "test_helpers.hpp"

using namespace spinqc;

TEST_SUITE("units") {

TEST_CASE("CODATA constants") {
  const auto c = codata_constants();
  CHECK(oracles::rel_diff(c.k_b_over_h_hz_per_k, 2.0836612e10) < 1e-6);
  CHECK(oracles::rel_diff(c.mu_b_over_h_hz_per_t, 1.3996245e10) < 1e-6);
  CHECK(c.k_b_over_h_hz_per_k == doctest::Approx(oracles::golden::k_b_over_h_hz_per_k).epsilon(1e-14));
  CHECK(c.mu_b_over_h_hz_per_t == doctest::Approx(oracles::golden::mu_b_over_h_hz_per_t).epsilon(1e-14));
  CHECK(c.h_bar_relative == 1.0);
}

TEST_CASE("kelvin_to_hz") {
  CHECK(kelvin_to_hz(0.0) == 0.0);
  CHECK(kelvin_to_hz(1.0) == constants::k_b_over_h_hz_per_k);
  CHECK(oracles::rel_diff(kelvin_to_hz(1.0), 2.0836612e10) < 1e-6);
  CHECK(oracles::rel_diff(kelvin_to_hz(50.0), 1.0418306e12) < 1e-6);
}

TEST_CASE("kilo_oersted_to_tesla") {
  CHECK(kilo_oersted_to_tesla(0.0) == 0.0);
  CHECK(kilo_oersted_to_tesla(10.0) == 1.0);
  CHECK(kilo_oersted_to_tesla(100.0) == 10.0);
}

TEST_CASE("mhz_per_koe_to_hz_per_t") {
  CHECK(mhz_per_koe_to_hz_per_t(4.3) == 4.3e7);
  CHECK(mhz_per_koe_to_hz_per_t(1.0) == 1e7);
  CHECK(mhz_per_koe_to_hz_per_t(0.0) == 0.0);
}

TEST_CASE("larmor_frequency") {
  CHECK(larmor_frequency(4.3e7, 10.0) == 4.3e8);
  CHECK(larmor_frequency(1.23e7, 0.0) == 0.0);
  CHECK(larmor_frequency(4.3e7, 0.1) == doctest::Approx(4.3e6).epsilon(1e-12));
  testing::check_throws_containing<std::invalid_argument>(
      [] { larmor_frequency(4.3e7, -1.0); }, "negative field");
}

TEST_CASE("conversions are linear") {
  const double xs[] = {0.3, 1.0, 7.25, 42.0, 1e-3, 5e4};
  // exact under power-of-two rescaling
  for (double x : xs) {
    for (double a : {0.5, 2.0, 8.0, 0.0625}) {
      CHECK(kelvin_to_hz(a * x) == a * kelvin_to_hz(x));
      CHECK(kilo_oersted_to_tesla(a * x) == a * kilo_oersted_to_tesla(x));
      CHECK(larmor_frequency(4.3e7, a * x) == a * larmor_frequency(4.3e7, x));
    }
    // within rounding for arbitrary scale factors
    for (double a : {3.0, 0.1, 7.3}) {
      CHECK(oracles::rel_diff(kelvin_to_hz(a * x), a * kelvin_to_hz(x)) < 1e-15);
      CHECK(oracles::rel_diff(kilo_oersted_to_tesla(a * x),
                              a * kilo_oersted_to_tesla(x)) < 1e-15);
    }
  }
}

TEST_CASE("kOe -> T -> kOe round trip") {
  // exact on the decimal-friendly values the configs use
  for (double x : {0.0, 0.5, 1.0, 2.0, 4.0, 10.0, 100.0, 1000.0, 0.25}) {
    CHECK(kilo_oersted_to_tesla(x) * 10.0 == x);
  }
  // generic doubles can land one ulp off (x0.1 is not injective in every
  // binade); never more
  for (double x : {3.0, 4.3, 7.77, 123.456}) {
    const double back = kilo_oersted_to_tesla(x) * 10.0;
    CHECK(std::abs(back - x) <= std::abs(x) * 1e-15);
  }
}

}  // TEST_SUITE
