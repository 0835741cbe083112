#include "polar/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "polar/rng.hpp"

namespace polar {

std::vector<double> bpsk_modulate(const BitVec& bits) {
  std::vector<double> symbols(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    symbols[i] = bits[i] ? -1.0 : 1.0;
  }
  return symbols;
}

double awgn_sigma(double ebn0_db, double rate) {
  if (rate <= 0.0 || rate > 1.0) throw std::invalid_argument("rate must be in (0,1]");
  return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

ChannelFrame awgn_add(std::span<const double> symbols, double ebn0_db, double rate,
                      std::uint64_t seed) {
  ChannelFrame frame;
  frame.snr_db = ebn0_db;
  frame.noise_sigma = awgn_sigma(ebn0_db, rate);
  frame.symbols.resize(symbols.size());
  GaussianStream noise(seed);
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    frame.symbols[i] = symbols[i] + frame.noise_sigma * noise.next();
  }
  return frame;
}

std::vector<double> channel_llr(const ChannelFrame& frame) {
  if (frame.noise_sigma <= 0.0) throw std::invalid_argument("noise_sigma must be positive");
  const double scale = 2.0 / (frame.noise_sigma * frame.noise_sigma);
  std::vector<double> llr(frame.symbols.size());
  for (std::size_t i = 0; i < frame.symbols.size(); ++i) {
    llr[i] = scale * frame.symbols[i];
  }
  return llr;
}

}  // namespace polar
