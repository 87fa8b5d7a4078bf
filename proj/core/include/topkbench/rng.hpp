#pragma once

#include <cstdint>

namespace topkbench {

// SplitMix64. Fixed algorithm, so streams are reproducible across
// platforms and standard library versions (std::mt19937 distributions
// are not portable between implementations).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 bits of resolution.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    // Multiply-shift bounding; the tiny modulo bias over a 64-bit space is
    // irrelevant here and keeps the draw count at exactly one per call.
    return static_cast<std::uint64_t>(next_double() * static_cast<double>(bound));
  }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + next_double() * (hi - lo); }

  /// Uniform integer in [lo, hi], both ends included.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1ull;
    return lo + static_cast<std::int64_t>(next_below(span));
  }

  /// Derives an independent child stream; consumes one draw.
  SplitMix64 split(std::uint64_t tag) {
    return SplitMix64(next() ^ (0x9e3779b97f4a7c15ull * (tag | 1ull)));
  }

 private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

}  // namespace topkbench
