// Plain successive-cancellation decoder, recursive form. Kept independent of
// the list machinery so it can serve as an oracle for L=1 equivalence checks.

#pragma once

#include <span>
#include <vector>

#include "polar/arith.hpp"
#include "polar/code.hpp"

namespace polar {

template <class A = FloatArith>
class ScDecoder {
 public:
  using Llr = typename A::Llr;

  explicit ScDecoder(const PolarCode& code, A arith = {}) : code_(&code), arith_(arith) {
    scratch_.resize(static_cast<std::size_t>(code.n) + 1);
    for (int d = 0; d <= code.n; ++d) {
      scratch_[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(code.N >> d));
    }
    beta_.resize(static_cast<std::size_t>(code.N));
  }

  // Estimated codeword from channel LLRs.
  BitVec decode_codeword(std::span<const double> channel) {
    auto& ch = scratch_[0];
    for (int i = 0; i < code_->N; ++i) {
      ch[static_cast<std::size_t>(i)] = arith_.from_channel(channel[static_cast<std::size_t>(i)]);
    }
    run(0, code_->N, 0);
    return beta_;
  }

  // Systematic readout: codeword bits at the unfrozen positions.
  BitVec decode(std::span<const double> channel) {
    return code_->extract_info(decode_codeword(channel));
  }

 private:
  void run(int begin, int len, int depth) {
    Llr* alpha = scratch_[static_cast<std::size_t>(depth)].data();
    std::uint8_t* beta = beta_.data() + begin;
    if (len == 1) {
      beta[0] = code_->frozen[static_cast<std::size_t>(begin)] ? 0 : (alpha[0] < 0);
      return;
    }
    const int half = len / 2;
    Llr* child = scratch_[static_cast<std::size_t>(depth) + 1].data();
    for (int i = 0; i < half; ++i) child[i] = arith_.f(alpha[i], alpha[i + half]);
    run(begin, half, depth + 1);
    for (int i = 0; i < half; ++i) child[i] = arith_.g(alpha[i], alpha[i + half], beta[i]);
    run(begin + half, half, depth + 1);
    for (int i = 0; i < half; ++i) beta[i] ^= beta[i + half];
  }

  const PolarCode* code_;
  A arith_;
  std::vector<std::vector<Llr>> scratch_;  // one LLR buffer per depth
  BitVec beta_;
};

}  // namespace polar
