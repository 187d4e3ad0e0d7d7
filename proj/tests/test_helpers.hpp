#pragma once

#include <doctest.h>

#include <functional>
#include <string>

namespace testing {

/// Small deterministic generator for property-style tests (xorshift64*).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  /// uniform in [lo, hi)
  double uniform(double lo, double hi) {
    const double u = (next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % (hi - lo + 1));
  }

 private:
  uint64_t state_;
};

/// Runs fn, requires it to throw E whose message contains `fragment`.
template <typename E, typename Fn>
void check_throws_containing(Fn&& fn, const std::string& fragment) {
  bool threw = false;
  try {
    fn();
  } catch (const E& e) {
    threw = true;
    const std::string what = e.what();
    INFO("exception message: " << what);
    CHECK(what.find(fragment) != std::string::npos);
  }
  CHECK_MESSAGE(threw, "expected exception containing \"" << fragment << "\"");
}

}  // namespace testing
