// Fixed-point contract for the bit-accurate decoder model.
//
// Quantization is written Qi.Qc.Qf: Qi bits for internal LLRs, Qc bits for
// channel LLRs, Qf shared fractional bits. Path metrics get Qi+1 bits and are
// normalized (minimum subtracted) after every survivor selection. Everything
// is two's complement with saturation, never wrap-around.

#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace polar {

struct QuantSpec {
  int qi = 6;
  int qc = 5;
  int qf = 0;

  int pm_bits() const { return qi + 1; }

  // Parses "Qi.Qc.Qf", e.g. "6.5.0". Throws std::invalid_argument on bad input.
  static QuantSpec parse(const std::string& text);

  void validate() const;  // qc <= qi, qf < qc, widths >= 2
  std::string str() const;

  bool operator==(const QuantSpec&) const = default;
};

// Clamp to the two's-complement range of `width` bits.
std::int32_t saturate(std::int64_t v, int width);

// round(x * 2^frac) half away from zero, saturated to `width` bits.
std::int32_t quantize_value(double x, int width, int frac);

struct FixedVal {
  std::int32_t raw = 0;
  int width = 0;
  int frac = 0;

  double to_double() const { return static_cast<double>(raw) / static_cast<double>(1 << frac); }
  bool operator==(const FixedVal&) const = default;
};

FixedVal quantize_llr(double x, int width, int frac);
FixedVal sat_add(const FixedVal& a, const FixedVal& b, int width);
FixedVal sat_sub(const FixedVal& a, const FixedVal& b, int width);

// Subtracts the minimum from every metric; ordering and arg-ranks preserved.
template <typename T>
void normalize_path_metrics(std::span<T> pms) {
  if (pms.empty()) return;
  T lo = pms[0];
  for (const T& p : pms) {
    if (p < lo) lo = p;
  }
  for (T& p : pms) p = static_cast<T>(p - lo);
}

}  // namespace polar
