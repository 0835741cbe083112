// Bit vectors and the polar transform (2x2 Arikan kernel, natural order).

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace polar {

using BitVec = std::vector<std::uint8_t>;  // values in {0,1}

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// log2 of a power of two; throws std::invalid_argument otherwise.
int log2_exact(std::size_t n);

// In-place butterfly x[b+j] ^= x[b+j+stride] for stride = 1,2,...,n/2.
// Self-inverse over GF(2); no bit-reversal permutation anywhere.
void polar_transform_inplace(std::span<std::uint8_t> bits);

BitVec polar_transform(BitVec v);

// One encoder stage: (left ^ right) || right. Lengths must match.
BitVec combine(const BitVec& left, const BitVec& right);

}  // namespace polar
