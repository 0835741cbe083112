// BPSK over AWGN: modulation, reproducible noise injection, channel LLRs.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polar/bits.hpp"

namespace polar {

struct ChannelFrame {
  std::vector<double> symbols;  // +-1 plus noise
  double snr_db = 0.0;          // Eb/N0 used to derive sigma
  double noise_sigma = 0.0;
};

// 0 -> +1.0, 1 -> -1.0.
std::vector<double> bpsk_modulate(const BitVec& bits);

// sigma for Eb/N0 (dB) at the given rate: sigma^2 = 1 / (2 * rate * 10^(snr/10)).
double awgn_sigma(double ebn0_db, double rate);

// Adds i.i.d. Gaussian noise; bit-identical for a given seed.
ChannelFrame awgn_add(std::span<const double> symbols, double ebn0_db, double rate,
                      std::uint64_t seed);

// LLR_i = 2*y_i / sigma^2; positive means bit 0 more likely.
std::vector<double> channel_llr(const ChannelFrame& frame);

}  // namespace polar
