#include "polar/crc.hpp"

#include <stdexcept>

namespace polar {

Crc::Crc(int length, std::uint32_t poly) : length_(length), poly_(poly) {
  if (length < 0 || length > 31) throw std::invalid_argument("crc length out of range");
}

BitVec Crc::remainder(const BitVec& info) const {
  if (length_ == 0) return {};
  const std::uint32_t mask = (1u << length_) - 1u;
  std::uint32_t reg = 0;
  for (std::uint8_t bit : info) {
    const std::uint32_t top = ((reg >> (length_ - 1)) ^ bit) & 1u;
    reg = (reg << 1) & mask;
    if (top) reg ^= poly_ & mask;
  }
  BitVec rem(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) {
    rem[i] = static_cast<std::uint8_t>((reg >> (length_ - 1 - i)) & 1u);
  }
  return rem;
}

BitVec Crc::append(const BitVec& info) const {
  BitVec out = info;
  const BitVec rem = remainder(info);
  out.insert(out.end(), rem.begin(), rem.end());
  return out;
}

bool Crc::check(const BitVec& word) const {
  if (length_ == 0) return true;
  if (word.size() < static_cast<std::size_t>(length_)) return false;
  BitVec info(word.begin(), word.end() - length_);
  const BitVec rem = remainder(info);
  for (int i = 0; i < length_; ++i) {
    if (rem[i] != word[word.size() - length_ + i]) return false;
  }
  return true;
}

}  // namespace polar
