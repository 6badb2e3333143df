#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace doe {

/// SplitMix64 (Steele, Lea, Flood 2014). The toolkit's single deterministic
/// 64-bit generator: every randomized artifact (run order, LHS/Monte-Carlo
/// samples, simulated noise) is a pure function of a 64-bit seed through this
/// generator, so plans and results reproduce bit-exactly across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound). Fixed-point multiply (Lemire); the
  /// residual bias of ~bound/2^64 is far below anything observable.
  std::uint64_t next_below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  /// Standard normal deviate via Box-Muller (two uniforms per pair, second
  /// value cached). Deterministic: no rejection loop.
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    double u2 = next_double();
    // Guard log(0); pushes u1 to the smallest representable stratum instead.
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

 private:
  std::uint64_t state_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

/// Deterministic seed derivation: seed for stream `index` under `master`.
/// One SplitMix64 scramble of (master XOR golden-ratio-spaced index); used
/// for per-run seeds (index = run_id), per-block shuffles, and per-simulation
/// noise streams.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  return SplitMix64(s).next_u64();
}

/// In-place Fisher-Yates shuffle driven by the supplied generator.
template <typename T>
void fisher_yates(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace doe
