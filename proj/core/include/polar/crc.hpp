// Bitwise CRC over bit vectors, MSB-first, zero initial value, no reflection.
// Default generator is CRC-8 0x07 (x^8 + x^2 + x + 1).

#pragma once

#include <cstdint>

#include "polar/bits.hpp"

namespace polar {

class Crc {
 public:
  explicit Crc(int length = 8, std::uint32_t poly = 0x07);

  int length() const { return length_; }

  // Remainder bits (length() of them, MSB first) of info * x^len mod generator.
  BitVec remainder(const BitVec& info) const;

  // info followed by its CRC bits; identity when length() == 0.
  BitVec append(const BitVec& info) const;

  // True iff `word` = info||crc has zero remainder.
  bool check(const BitVec& word) const;

 private:
  int length_;
  std::uint32_t poly_;
};

}  // namespace polar
