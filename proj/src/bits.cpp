#include "polar/bits.hpp"

#include <stdexcept>

namespace polar {

void polar_transform_inplace(BitVector& u) {
  const std::size_t n = u.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("polar_transform: length must be a power of two");
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        u[j] = static_cast<uint8_t>(u[j] ^ u[j + h]);
      }
    }
  }
}

BitVector polar_transform(BitVector u) {
  polar_transform_inplace(u);
  return u;
}

}  // namespace polar
