#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "ssa/types.hpp"

namespace ssa {

/// Maps a uniform draw u in [0, 1) to Exp(rate) by inversion: -ln(1 - u) / rate.
inline double inverse_exponential(double u, double rate) {
  return -std::log1p(-u) / rate;
}

/// Mixes a 64-bit value (splitmix64 finalizer). Used to derive
/// well-separated seeds for replicas and sub-streams.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for replica `index` of a stream family rooted at `base`.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return mix_seed(base ^ mix_seed(index + 0x632be59bd9b4e019ULL));
}

/// Reproducible random stream. Identical seeds give identical sequences
/// regardless of which engine consumes them.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1); never returns 0.
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform integer on {0, ..., k-1}. Requires k > 0.
  std::uint64_t uniform_index(std::uint64_t k) {
    SSA_EXPECTS(k > 0, "uniform_index needs a nonempty range");
    auto i = static_cast<std::uint64_t>(uniform() * static_cast<double>(k));
    return i < k ? i : k - 1;
  }

  /// Exp(rate) by inverse transform; strictly positive.
  double exponential(double rate) {
    SSA_EXPECTS(rate > 0.0, "exponential rate must be positive");
    return inverse_exponential(uniform_open(), rate);
  }

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Free-function form used throughout the engines.
inline double sample_exponential(RngStream& rng, double rate) {
  return rng.exponential(rate);
}

}  // namespace ssa
