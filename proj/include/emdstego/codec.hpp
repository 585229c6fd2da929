#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace emdstego {

struct BitStream {
  std::vector<std::uint8_t> bits;  // each entry is 0 or 1

  std::size_t bit_length() const noexcept { return bits.size(); }
  friend bool operator==(const BitStream&, const BitStream&) = default;
};

struct SymbolStream {
  std::vector<std::uint64_t> symbols;
  std::uint64_t modulus = 2;
};

/// floor(log2 M): the number of message bits carried by one M-ary symbol.
int bits_per_symbol(std::uint64_t modulus);

/// Chunks MSB-first; the last partial chunk is zero-padded on the right.
SymbolStream bits_to_symbols(const BitStream& msg, std::uint64_t modulus);

BitStream symbols_to_bits(const SymbolStream& sym, std::size_t bit_length);

/// MSB-first packing with a zero-padded final byte.
std::vector<std::uint8_t> pack_bits(const BitStream& bits);
BitStream unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_length);

}  // namespace emdstego
