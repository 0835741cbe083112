// LLR arithmetic policies. Decoders are templated on one of these so the
// floating-point and bit-accurate fixed-point models share a single code path.
//
// Sign convention: positive LLR means bit 0 is more likely; the hard decision
// of a zero LLR is 0. A decision disagreeing with its LLR's hard decision
// costs |LLR| of path metric, agreement costs nothing.

#pragma once

#include <cmath>
#include <cstdint>
#include <span>

#include "polar/quant.hpp"

namespace polar {

template <typename T>
inline T f_minsum(T a, T b) {
  const T am = a < 0 ? static_cast<T>(-a) : a;
  const T bm = b < 0 ? static_cast<T>(-b) : b;
  const T m = am < bm ? am : bm;
  return ((a < 0) != (b < 0)) ? static_cast<T>(-m) : m;
}

struct FloatArith {
  using Llr = double;
  using Pm = double;
  static constexpr bool is_fixed = false;

  Llr from_channel(double x) const { return x; }
  Llr f(Llr a, Llr b) const { return f_minsum(a, b); }
  Llr g(Llr a, Llr b, std::uint8_t u) const { return u ? b - a : b + a; }
  static Pm magnitude(Llr v) { return v < 0 ? -v : v; }
  Pm add_penalty(Pm pm, Pm mag) const { return pm + mag; }
  void normalize(std::span<Pm>) const {}
};

struct FixedArith {
  QuantSpec quant{};
  static constexpr bool is_fixed = true;

  using Llr = std::int32_t;
  using Pm = std::int32_t;

  explicit FixedArith(QuantSpec q = {}) : quant(q) { quant.validate(); }

  Llr from_channel(double x) const { return quantize_value(x, quant.qc, quant.qf); }
  Llr f(Llr a, Llr b) const { return f_minsum(a, b); }
  Llr g(Llr a, Llr b, std::uint8_t u) const {
    return saturate(std::int64_t{b} + (u ? -std::int64_t{a} : std::int64_t{a}), quant.qi);
  }
  static Pm magnitude(Llr v) { return v < 0 ? -v : v; }
  Pm add_penalty(Pm pm, Pm mag) const {
    return saturate(std::int64_t{pm} + mag, quant.pm_bits());
  }
  void normalize(std::span<Pm> pms) const { normalize_path_metrics(pms); }
};

}  // namespace polar
