// Code construction, systematic encoding, and frozen-mask serialization.

#pragma once

#include <string>
#include <vector>

#include "polar/bits.hpp"
#include "polar/crc.hpp"

namespace polar {

enum class ConstructionMethod { GaussianApprox, BhattacharyyaBec };

std::string to_string(ConstructionMethod m);
ConstructionMethod construction_from_string(const std::string& s);

// Bhattacharyya parameters of the N synthetic channels of a BEC(eps),
// natural bit order: z[2i] = 2z - z^2 (minus branch), z[2i+1] = z^2.
std::vector<double> bec_bhattacharyya(int block_length, double eps);

// Gaussian-approximation density-evolution LLR means for BPSK/AWGN at the
// given design Eb/N0 and code rate. Larger mean = more reliable channel.
std::vector<double> awgn_ga_means(int block_length, double design_snr_db, double rate);

// N - k least reliable positions marked frozen (true). Ties broken toward
// freezing the smaller index, which keeps the mask monotone under bitwise
// domination (required by the double-transform systematic encoder).
BitVec construct_frozen_set(int block_length, int info_length, double design_snr_db,
                            ConstructionMethod method = ConstructionMethod::GaussianApprox);
BitVec construct_frozen_set_bec(int block_length, int info_length, double eps);

struct PolarCode {
  int n = 0;               // log2(N)
  int N = 0;               // block length
  int k = 0;               // unfrozen positions (information + CRC bits)
  int crc_len = 0;         // CRC bits carried inside the k unfrozen positions
  double design_snr_db = 0.0;
  ConstructionMethod method = ConstructionMethod::GaussianApprox;
  BitVec frozen;           // size N, 1 = frozen

  static PolarCode construct(int N, int k, double design_snr_db, int crc_len = 0,
                             ConstructionMethod method = ConstructionMethod::GaussianApprox);
  static PolarCode from_mask(BitVec frozen_mask, int crc_len = 0);

  int info_length() const { return k - crc_len; }  // payload bits, CRC excluded
  Crc crc() const { return Crc(crc_len); }

  std::vector<int> unfrozen_positions() const;  // ascending

  // Codeword bits at the unfrozen positions (info||crc for valid codewords).
  BitVec extract_info(const BitVec& codeword) const;

  // Systematic encoder: place info at unfrozen positions, transform, zero the
  // frozen positions, transform again. The returned codeword carries `info`
  // verbatim at the unfrozen positions.
  BitVec encode_systematic(const BitVec& info) const;

  void validate() const;
};

// JSON mask fixture: {N, k, design_snr_db, method, frozen_positions:[...]}.
std::string frozen_mask_to_json(const PolarCode& code);
PolarCode frozen_mask_from_json(const std::string& text, int crc_len = 0);
void save_frozen_json(const PolarCode& code, const std::string& path);
PolarCode load_frozen_json(const std::string& path, int crc_len = 0);

}  // namespace polar
