#include "polar/bits.hpp"

#include <stdexcept>

namespace polar {

int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("length must be a power of two");
  int m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return m;
}

void polar_transform_inplace(std::span<std::uint8_t> bits) {
  const std::size_t n = bits.size();
  (void)log2_exact(n);
  for (std::size_t stride = 1; stride < n; stride <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * stride) {
      for (std::size_t j = 0; j < stride; ++j) {
        bits[block + j] ^= bits[block + j + stride];
      }
    }
  }
}

BitVec polar_transform(BitVec v) {
  polar_transform_inplace(v);
  return v;
}

BitVec combine(const BitVec& left, const BitVec& right) {
  if (left.size() != right.size()) throw std::invalid_argument("combine: length mismatch");
  BitVec out(left.size() * 2);
  for (std::size_t i = 0; i < left.size(); ++i) {
    out[i] = left[i] ^ right[i];
    out[i + left.size()] = right[i];
  }
  return out;
}

}  // namespace polar
