#include "polar/quant.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polar {

QuantSpec QuantSpec::parse(const std::string& text) {
  QuantSpec q;
  char dot1 = 0, dot2 = 0;
  std::istringstream in(text);
  if (!(in >> q.qi >> dot1 >> q.qc >> dot2 >> q.qf) || dot1 != '.' || dot2 != '.' ||
      !in.eof()) {
    throw std::invalid_argument("quantization must be given as Qi.Qc.Qf, e.g. 6.5.0: got '" +
                                text + "'");
  }
  q.validate();
  return q;
}

void QuantSpec::validate() const {
  if (qi < 2 || qc < 2) throw std::invalid_argument("LLR widths must be at least 2 bits");
  if (qc > qi) throw std::invalid_argument("channel LLR width Qc must not exceed Qi");
  if (qf < 0 || qf >= qc) throw std::invalid_argument("fractional bits Qf must satisfy 0 <= Qf < Qc");
  if (qi > 30) throw std::invalid_argument("Qi too large for 32-bit raw values");
}

std::string QuantSpec::str() const {
  std::ostringstream out;
  out << qi << '.' << qc << '.' << qf;
  return out.str();
}

std::int32_t saturate(std::int64_t v, int width) {
  const std::int64_t hi = (std::int64_t{1} << (width - 1)) - 1;
  const std::int64_t lo = -(std::int64_t{1} << (width - 1));
  if (v > hi) return static_cast<std::int32_t>(hi);
  if (v < lo) return static_cast<std::int32_t>(lo);
  return static_cast<std::int32_t>(v);
}

std::int32_t quantize_value(double x, int width, int frac) {
  const double scaled = x * static_cast<double>(1 << frac);
  // llround rounds halfway cases away from zero.
  const long long r = std::llround(scaled);
  return saturate(r, width);
}

FixedVal quantize_llr(double x, int width, int frac) {
  if (width < 2) throw std::invalid_argument("fixed-point width must be at least 2");
  return FixedVal{quantize_value(x, width, frac), width, frac};
}

FixedVal sat_add(const FixedVal& a, const FixedVal& b, int width) {
  if (a.frac != b.frac) throw std::invalid_argument("sat_add: fractional bits differ");
  return FixedVal{saturate(std::int64_t{a.raw} + b.raw, width), width, a.frac};
}

FixedVal sat_sub(const FixedVal& a, const FixedVal& b, int width) {
  if (a.frac != b.frac) throw std::invalid_argument("sat_sub: fractional bits differ");
  return FixedVal{saturate(std::int64_t{a.raw} - b.raw, width), width, a.frac};
}

}  // namespace polar
