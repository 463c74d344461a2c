#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace orbmeas::oracle {

/// SplitMix64 finalizer; used to derive independent per-chunk seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) noexcept {
  return splitmix64(splitmix64(seed) ^ (chunk + 1) * 0xD1B54A32D192ED03ull);
}

/// std::mt19937_64 with hand-written uniform and Box–Muller normal draws.
/// The engine's output sequence is fixed by the C++ standard and the
/// transforms below are plain arithmetic, so a seed reproduces the same
/// stream on every conforming toolchain (std::normal_distribution does not
/// guarantee that).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal N(0, 1).
  double normal() noexcept {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace orbmeas::oracle
