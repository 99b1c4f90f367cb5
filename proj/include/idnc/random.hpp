#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace idnc {

/// Purposes a frame seed is split into. Each purpose gets an independent
/// stream so that, e.g., changing the strategy never perturbs channel draws.
enum class StreamPurpose : std::uint64_t {
  kErasureDraw = 1,
  kInitialPhase = 2,
  kChannel = 3,
  kStrategy = 4,
  kOracle = 5,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic child seed of `parent` for (index, purpose).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index,
                          std::uint64_t purpose = 0);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Rng(std::uint64_t parent, StreamPurpose purpose)
      : engine_(derive_seed(parent, 0, static_cast<std::uint64_t>(purpose))) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }

  /// Uniform integer in [lo, hi].
  int between(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace idnc
