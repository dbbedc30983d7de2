#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace polar {

// Two's-complement saturation to `bits` wide: [-2^(bits-1), 2^(bits-1)-1].
inline int32_t saturate_signed(int64_t v, int bits) {
  const int64_t hi = (int64_t(1) << (bits - 1)) - 1;
  const int64_t lo = -(int64_t(1) << (bits - 1));
  return static_cast<int32_t>(v < lo ? lo : (v > hi ? hi : v));
}

// round(llr * scale) half away from zero, saturated to q bits.
inline int32_t quantize_llr(double llr, int q, double scale) {
  if (q < 2 || q > 30) throw std::invalid_argument("quantize_llr: need 2 <= q <= 30");
  if (!(scale > 0.0)) throw std::invalid_argument("quantize_llr: scale must be positive");
  const double scaled = llr * scale;
  const int64_t rounded = static_cast<int64_t>(std::llround(scaled));
  return saturate_signed(rounded, q);
}

}  // namespace polar
