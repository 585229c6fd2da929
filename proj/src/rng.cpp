#include "emdstego/rng.hpp"

namespace emdstego {

BitStream seeded_bits(std::uint64_t seed, std::size_t count) {
  SplitMix64 gen(seed);
  BitStream out;
  out.bits.reserve(count);
  while (out.bits.size() < count) {
    const std::uint64_t word = gen.next();
    for (int b = 63; b >= 0 && out.bits.size() < count; --b) {
      out.bits.push_back(static_cast<std::uint8_t>((word >> b) & 1u));
    }
  }
  return out;
}

GrayImage seeded_interior_image(int width, int height, std::uint64_t seed) {
  SplitMix64 gen(seed);
  std::vector<std::uint8_t> px(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
  for (auto& p : px) p = static_cast<std::uint8_t>(32 + gen.next() % 192);
  return GrayImage(width, height, std::move(px));
}

}  // namespace emdstego
