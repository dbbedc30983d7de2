#pragma once

#include <cstdint>

#include "polar/bits.hpp"

namespace polar {

// CRC-24 with generator 0x864cfb, zero initial register, no input/output
// reflection and no final xor. The checksum is the remainder of
// message(x) * x^24 divided by the generator, msb first.
struct CrcConfig {
  static constexpr int width = 24;
  static constexpr uint32_t generator = 0x864cfb;
  static constexpr uint32_t initial = 0;
};

uint32_t crc24_compute(const BitVector& message);
BitVector crc24_bits(const BitVector& message);  // width bits, msb first
bool crc24_check(const BitVector& payload, const BitVector& checksum_bits);

}  // namespace polar
