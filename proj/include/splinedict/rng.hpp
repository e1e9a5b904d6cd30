#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace splinedict {

/// Deterministic random source: mt19937_64 with fixed derivations. The std
/// distributions are not byte-portable across standard libraries, so the
/// uniform/bounded/normal draws are spelled out here; identical seeds give
/// identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on [0, 1): the high 53 bits scaled by 2^-53.
  [[nodiscard]] double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  [[nodiscard]] double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform integer in [0, n), unbiased by rejection.
  [[nodiscard]] std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    for (;;) {
      const std::uint64_t x = eng_();
      if (x < limit) return x % n;
    }
  }

  /// Standard normal via Box-Muller.
  [[nodiscard]] double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0;
};

}  // namespace splinedict
