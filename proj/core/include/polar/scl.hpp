// Successive-cancellation list decoding, bit by bit.
//
// Phase-driven formulation with per-path LLR/partial-sum layers in natural
// order: layer 0 is the channel, layer m a single decision LLR. Paths own
// their buffers; a selection step moves surviving paths and deep-copies only
// when one parent keeps both branches.

#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <vector>

#include "polar/arith.hpp"
#include "polar/code.hpp"
#include "polar/node_ops.hpp"

namespace polar {

struct DecodeCandidate {
  BitVec codeword;
  double pm = 0.0;
};

template <class A = FloatArith>
class ListDecoder {
 public:
  using Llr = typename A::Llr;
  using Pm = typename A::Pm;

  ListDecoder(const PolarCode& code, int list_size, A arith = {})
      : code_(&code), L_(list_size), m_(code.n), N_(code.N), arith_(arith) {
    if (list_size < 1) throw std::invalid_argument("list size must be >= 1");
    if (N_ < 2) throw std::invalid_argument("block length must be >= 2");
    p_off_.assign(static_cast<std::size_t>(m_) + 1, 0);
    c_off_.assign(static_cast<std::size_t>(m_) + 1, 0);
    int p_total = 0, c_total = 0;
    for (int layer = 0; layer <= m_; ++layer) {
      c_off_[static_cast<std::size_t>(layer)] = c_total;
      c_total += 2 * (N_ >> layer);
      if (layer >= 1) {
        p_off_[static_cast<std::size_t>(layer)] = p_total;
        p_total += N_ >> layer;
      }
    }
    p_size_ = p_total;
    c_size_ = c_total;
    channel_.resize(static_cast<std::size_t>(N_));
  }

  // Ranked candidate list (ascending path metric) from channel LLRs.
  std::vector<DecodeCandidate> decode(std::span<const double> channel) {
    if (static_cast<int>(channel.size()) != N_) {
      throw std::invalid_argument("LLR vector length != N");
    }
    for (int i = 0; i < N_; ++i) {
      channel_[static_cast<std::size_t>(i)] = arith_.from_channel(channel[static_cast<std::size_t>(i)]);
    }

    paths_.clear();
    paths_.push_back(make_path());

    for (int phi = 0; phi < N_; ++phi) {
      for (Path& path : paths_) calc_llr(path, m_, phi);
      if (code_->frozen[static_cast<std::size_t>(phi)]) {
        for (Path& path : paths_) {
          const Llr llr = decision_llr(path);
          if (llr < 0) path.pm = arith_.add_penalty(path.pm, A::magnitude(llr));
          set_bit(path, phi, 0);
        }
      } else {
        fork_and_select(phi);
      }
      if (phi & 1) {
        for (Path& path : paths_) update_c(path, m_, phi);
      }
    }

    std::vector<DecodeCandidate> out;
    out.reserve(paths_.size());
    for (const Path& path : paths_) {
      const std::uint8_t* cw = path.c.data() + c_off_[0];
      out.push_back(DecodeCandidate{BitVec(cw, cw + N_), static_cast<double>(path.pm)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const DecodeCandidate& a, const DecodeCandidate& b) { return a.pm < b.pm; });
    return out;
  }

 private:
  struct Path {
    Pm pm{};
    std::vector<Llr> p;            // LLR layers 1..m
    std::vector<std::uint8_t> c;   // partial-sum layers 0..m, two slots each
  };

  Path make_path() const {
    Path path;
    path.pm = Pm{};
    path.p.assign(static_cast<std::size_t>(p_size_), Llr{});
    path.c.assign(static_cast<std::size_t>(c_size_), 0);
    return path;
  }

  Llr decision_llr(const Path& path) const { return path.p[static_cast<std::size_t>(p_off_[static_cast<std::size_t>(m_)])]; }

  void set_bit(Path& path, int phi, std::uint8_t bit) {
    path.c[static_cast<std::size_t>(c_off_[static_cast<std::size_t>(m_)] + (phi & 1))] = bit;
  }

  void calc_llr(Path& path, int layer, int phi) {
    if ((phi & 1) == 0 && layer > 1) calc_llr(path, layer - 1, phi >> 1);
    const int size = N_ >> layer;
    const Llr* parent =
        layer == 1 ? channel_.data() : path.p.data() + p_off_[static_cast<std::size_t>(layer - 1)];
    Llr* out = path.p.data() + p_off_[static_cast<std::size_t>(layer)];
    if ((phi & 1) == 0) {
      for (int i = 0; i < size; ++i) out[i] = arith_.f(parent[i], parent[i + size]);
    } else {
      const std::uint8_t* left = path.c.data() + c_off_[static_cast<std::size_t>(layer)];
      for (int i = 0; i < size; ++i) out[i] = arith_.g(parent[i], parent[i + size], left[i]);
    }
  }

  void update_c(Path& path, int layer, int phi) {
    const int size = N_ >> layer;
    const int psi = phi >> 1;
    const std::uint8_t* l = path.c.data() + c_off_[static_cast<std::size_t>(layer)];
    const std::uint8_t* r = l + size;
    std::uint8_t* dst =
        path.c.data() + c_off_[static_cast<std::size_t>(layer - 1)] + (psi & 1) * (2 * size);
    for (int i = 0; i < size; ++i) {
      dst[i] = l[i] ^ r[i];
      dst[i + size] = r[i];
    }
    if ((psi & 1) && layer > 1) update_c(path, layer - 1, psi);
  }

  void fork_and_select(int phi) {
    cands_.clear();
    for (std::size_t pi = 0; pi < paths_.size(); ++pi) {
      const Llr llr = decision_llr(paths_[pi]);
      const Pm mag = A::magnitude(llr);
      const bool hard = llr < 0;
      const Pm pm = paths_[pi].pm;
      cands_.push_back({static_cast<int>(pi), 0, hard ? arith_.add_penalty(pm, mag) : pm});
      cands_.push_back({static_cast<int>(pi), 1, hard ? pm : arith_.add_penalty(pm, mag)});
    }
    select_best(cands_, L_);
    pms_.resize(cands_.size());
    for (std::size_t i = 0; i < cands_.size(); ++i) pms_[i] = cands_[i].pm;
    arith_.normalize(std::span<Pm>(pms_));

    first_use_.assign(paths_.size(), -1);
    next_paths_.clear();
    for (std::size_t si = 0; si < cands_.size(); ++si) {
      const int parent = cands_[si].parent;
      Path path;
      if (first_use_[static_cast<std::size_t>(parent)] < 0) {
        first_use_[static_cast<std::size_t>(parent)] = static_cast<int>(si);
        path = std::move(paths_[static_cast<std::size_t>(parent)]);
      } else {
        const Path& src = next_paths_[static_cast<std::size_t>(first_use_[static_cast<std::size_t>(parent)])];
        path = take_from_pool();
        path.p = src.p;
        path.c = src.c;
      }
      path.pm = pms_[si];
      set_bit(path, phi, static_cast<std::uint8_t>(cands_[si].cand));
      next_paths_.push_back(std::move(path));
    }
    for (std::size_t pi = 0; pi < paths_.size(); ++pi) {
      if (first_use_[pi] < 0) pool_.push_back(std::move(paths_[pi]));
    }
    paths_.swap(next_paths_);
  }

  Path take_from_pool() {
    if (pool_.empty()) return make_path();
    Path path = std::move(pool_.back());
    pool_.pop_back();
    return path;
  }

  const PolarCode* code_;
  int L_, m_, N_;
  A arith_;
  int p_size_ = 0, c_size_ = 0;
  std::vector<int> p_off_, c_off_;
  std::vector<Llr> channel_;
  std::vector<Path> paths_, next_paths_, pool_;
  std::vector<RankedCand<Pm>> cands_;
  std::vector<Pm> pms_;
  std::vector<int> first_use_;
};

// Lowest-metric candidate whose CRC (over the systematic readout) checks;
// falls back to the overall lowest metric. Empty input is invalid.
BitVec ca_scl_select(const PolarCode& code, const std::vector<DecodeCandidate>& ranked);

}  // namespace polar
