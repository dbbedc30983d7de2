#include "polar/codec.hpp"

#include <stdexcept>

#include "polar/crc24.hpp"

namespace polar {

BitVector assemble_source_word(const BitVector& info, const PolarCodeSpec& spec) {
  const int payload_len = spec.info_count - spec.crc_bits;
  if (static_cast<int>(info.size()) != payload_len) {
    throw std::invalid_argument("assemble_source_word: payload must have K - r bits");
  }
  if (spec.crc_bits != 0 && spec.crc_bits != CrcConfig::width) {
    throw std::invalid_argument("assemble_source_word: r must be 0 or 24");
  }
  BitVector u(spec.block_length, 0);
  for (int i = 0; i < payload_len; ++i) u[spec.info_set[i]] = info[i] & 1;
  if (spec.crc_bits) {
    const BitVector crc = crc24_bits(info);
    for (int j = 0; j < spec.crc_bits; ++j) u[spec.info_set[payload_len + j]] = crc[j];
  }
  return u;
}

BitVector encode(const BitVector& info, const PolarCodeSpec& spec) {
  return polar_transform(assemble_source_word(info, spec));
}

BitVector extract_info_bits(const BitVector& u, const PolarCodeSpec& spec) {
  BitVector out(spec.info_set.size());
  for (std::size_t i = 0; i < spec.info_set.size(); ++i) out[i] = u[spec.info_set[i]];
  return out;
}

PayloadView extract_payload(const BitVector& u, const PolarCodeSpec& spec) {
  const BitVector info = extract_info_bits(u, spec);
  PayloadView view;
  view.payload.assign(info.begin(), info.end() - spec.crc_bits);
  if (spec.crc_bits == 0) {
    view.crc_ok = true;
  } else {
    const BitVector checksum(info.end() - spec.crc_bits, info.end());
    view.crc_ok = crc24_check(view.payload, checksum);
  }
  return view;
}

}  // namespace polar
