#pragma once

#include <cstdint>

namespace viswork {

// SplitMix64 (Steele, Lea, Flood; public-domain reference constants): a tiny
// seedable generator so runs reproduce bit-for-bit across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, bound); rejection sampling removes modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~0ull - ~0ull % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace viswork
