#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace gpssm {

// Deterministic random stream. mt19937_64 output is fixed by the standard,
// and all distribution transforms are done here by hand, so a given seed
// produces the same values on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform in the open interval (0, 1).
  double uniform_open01() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform on the open interval (lo, hi).
  double uniform_open(double lo, double hi) {
    return lo + (hi - lo) * uniform_open01();
  }

  // Box-Muller; consumes exactly two draws per call (no caching, so the
  // stream position never depends on past call patterns).
  double normal(double mean = 0.0, double stddev = 1.0) {
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 eng_;
};

// Mixes a base seed with stream indices so parallel runs get independent,
// reproducible streams. SplitMix64 finalizer.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (a + 1) +
                    0xBF58476D1CE4E5B9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace gpssm
