#pragma once

#include <cstdint>

#include "emdstego/codec.hpp"
#include "emdstego/image.hpp"

namespace emdstego {

/// SplitMix64.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t x = (state_ += 0x9E3779B97F4A7C15ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Output words as big-endian bytes, bits MSB-first.
BitStream seeded_bits(std::uint64_t seed, std::size_t count);

/// Pixels drawn uniformly from [32, 223].
GrayImage seeded_interior_image(int width, int height, std::uint64_t seed);

}  // namespace emdstego
