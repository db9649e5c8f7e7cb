#pragma once

#include <cstdint>

namespace arb {

// SplitMix64 (Steele, Lea, Flood 2014). One 64-bit state word advanced by the
// golden-ratio increment; outputs pass through the standard finalizer.
//
// Streams: derive(seed, k) starts an independent stream per (seed, k) pair via
//   state0 = mix(seed) ^ mix(k * 0x9E3779B97F4A7C15 + 1)
// so stream k never depends on how many values earlier streams consumed.
// The algorithm and the stream formula are frozen; golden tests pin outputs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static SplitMix64 derive(std::uint64_t seed, std::uint64_t stream) {
    return SplitMix64(mix(seed) ^ mix(stream * 0x9E3779B97F4A7C15ULL + 1));
  }

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1), 53 mantissa bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi). Returns exactly lo when lo == hi.
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace arb
