#pragma once

#include "polar/bits.hpp"
#include "polar/construction.hpp"

namespace polar {

// Source word u of length N: frozen positions 0, the first K-r information
// positions (ascending order of A) carry the payload, the last r carry the
// CRC-24 of the payload msb first. r must be 0 or 24.
BitVector assemble_source_word(const BitVector& info, const PolarCodeSpec& spec);

// encode = polar_transform(assemble_source_word(info)).
BitVector encode(const BitVector& info, const PolarCodeSpec& spec);

// The K bits of u at the information positions, ascending.
BitVector extract_info_bits(const BitVector& u, const PolarCodeSpec& spec);

// Payload (first K-r info bits) of u; crc_ok checks the trailing r bits
// against the payload's CRC-24 (vacuously true when r = 0).
struct PayloadView {
  BitVector payload;
  bool crc_ok = false;
};
PayloadView extract_payload(const BitVector& u, const PolarCodeSpec& spec);

}  // namespace polar
