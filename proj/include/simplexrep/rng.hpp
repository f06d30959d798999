#pragma once

#include <cstdint>
#include <string_view>

namespace simplexrep {

// SplitMix64 finalizer; bijective 64-bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Key for a counter-based stream, derived from (seed, operation tag, chunk).
// Streams with distinct tags or chunk indices are statistically independent,
// which is what makes worker-count-invariant Monte Carlo reductions possible.
std::uint64_t stream_key(std::uint64_t seed, std::string_view tag, std::uint64_t chunk);

// Small deterministic generator used for every random draw in the project.
// Portable across platforms and toolchains, unlike <random> distributions.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on (0, 1]; never returns 0 so log() is safe.
  double next_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the second variate is cached.
  double next_normal();

  // Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace simplexrep
