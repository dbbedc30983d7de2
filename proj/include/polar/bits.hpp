#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polar {

using BitVector = std::vector<uint8_t>;

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

// x = u * F^(n) over GF(2) with F = [[1,0],[1,1]], natural bit order (no
// bit-reversal anywhere). Involutive: applying it twice is the identity.
void polar_transform_inplace(BitVector& u);
BitVector polar_transform(BitVector u);

}  // namespace polar
