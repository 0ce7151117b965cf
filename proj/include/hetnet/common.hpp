#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hetnet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Traffic cannot be supported by the given constraint set.
struct InfeasibleError : Error {
  using Error::Error;
};

// A queue with positive arrivals has rate <= arrival rate.
struct InfeasibleRatesError : Error {
  using Error::Error;
};

// Post-processing start point has an infinite objective.
struct BadStartError : Error {
  using Error::Error;
};

// Pattern-support compression could not reach the target support size.
struct ReductionIncompleteError : Error {
  ReductionIncompleteError(const std::string& msg, int achieved)
      : Error(msg), achieved_support(achieved) {}
  int achieved_support = 0;
};

// Instance exceeds a hard size guard.
struct RefusedError : Error {
  using Error::Error;
};

// Pivoting stalled or the basis went numerically bad; message carries diagnostics.
struct NumericalFailureError : Error {
  using Error::Error;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Deterministic RNG wrapper. std::uniform_* distributions are
// implementation-defined, so sampling is done by hand to keep seeded
// scenarios byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    // xorshift* generator
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dULL;
  }

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace hetnet
