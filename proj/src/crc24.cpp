#include "polar/crc24.hpp"

#include <stdexcept>

namespace polar {

uint32_t crc24_compute(const BitVector& message) {
  constexpr uint32_t mask = (1u << CrcConfig::width) - 1;
  uint32_t reg = CrcConfig::initial;
  for (uint8_t bit : message) {
    const uint32_t feedback = ((reg >> (CrcConfig::width - 1)) & 1u) ^ (bit & 1u);
    reg = (reg << 1) & mask;
    if (feedback) reg ^= CrcConfig::generator;
  }
  return reg;
}

BitVector crc24_bits(const BitVector& message) {
  const uint32_t crc = crc24_compute(message);
  BitVector out(CrcConfig::width);
  for (int i = 0; i < CrcConfig::width; ++i) {
    out[i] = static_cast<uint8_t>((crc >> (CrcConfig::width - 1 - i)) & 1u);
  }
  return out;
}

bool crc24_check(const BitVector& payload, const BitVector& checksum_bits) {
  if (checksum_bits.size() != CrcConfig::width) {
    throw std::invalid_argument("crc24_check: checksum must be 24 bits");
  }
  return crc24_bits(payload) == checksum_bits;
}

}  // namespace polar
