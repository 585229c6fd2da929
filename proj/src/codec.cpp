#include "emdstego/codec.hpp"

#include <bit>

#include "emdstego/error.hpp"

namespace emdstego {

int bits_per_symbol(std::uint64_t modulus) {
  if (modulus < 2) throw Error(Errc::InvalidParameter, "modulus must be >= 2");
  return std::bit_width(modulus) - 1;
}

SymbolStream bits_to_symbols(const BitStream& msg, std::uint64_t modulus) {
  const int width = bits_per_symbol(modulus);
  SymbolStream out;
  out.modulus = modulus;
  const std::size_t len = msg.bit_length();
  out.symbols.reserve((len + width - 1) / width);
  for (std::size_t i = 0; i < len; i += static_cast<std::size_t>(width)) {
    std::uint64_t sym = 0;
    for (int b = 0; b < width; ++b) {
      const std::size_t idx = i + static_cast<std::size_t>(b);
      sym = (sym << 1) | (idx < len ? (msg.bits[idx] & 1u) : 0u);
    }
    out.symbols.push_back(sym);
  }
  return out;
}

BitStream symbols_to_bits(const SymbolStream& sym, std::size_t bit_length) {
  const int width = bits_per_symbol(sym.modulus);
  const std::size_t available = sym.symbols.size() * static_cast<std::size_t>(width);
  if (bit_length > available) {
    throw Error(Errc::LengthOverrun, "requested " + std::to_string(bit_length) + " bits, only " +
                                         std::to_string(available) + " available");
  }
  const std::uint64_t limit = std::uint64_t{1} << width;
  BitStream out;
  out.bits.reserve(bit_length);
  for (std::uint64_t s : sym.symbols) {
    if (out.bits.size() >= bit_length) break;
    if (s >= limit) {
      throw Error(Errc::SymbolOutOfRange,
                  "symbol " + std::to_string(s) + " does not fit in " + std::to_string(width) + " bits");
    }
    for (int b = width - 1; b >= 0 && out.bits.size() < bit_length; --b) {
      out.bits.push_back(static_cast<std::uint8_t>((s >> b) & 1u));
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_bits(const BitStream& bits) {
  std::vector<std::uint8_t> out((bits.bit_length() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.bit_length(); ++i) {
    if (bits.bits[i] & 1u) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

BitStream unpack_bits(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
  if (bit_length > bytes.size() * 8) {
    throw Error(Errc::LengthOverrun, "not enough bytes for requested bit length");
  }
  BitStream out;
  out.bits.resize(bit_length);
  for (std::size_t i = 0; i < bit_length; ++i) {
    out.bits[i] = static_cast<std::uint8_t>((bytes[i / 8] >> (7 - i % 8)) & 1u);
  }
  return out;
}

}  // namespace emdstego
