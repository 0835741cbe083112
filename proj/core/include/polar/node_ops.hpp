// Constituent-node candidate generation and the L-best selection shared by
// the list decoders and the pipeline simulator.
//
// Every leaf kind emits, per path, candidates ordered by (penalty, emission
// index); the global selection is a stable sort on metric over candidates
// enumerated parent-major, so ties resolve on (parent path, candidate index).

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "polar/arith.hpp"
#include "polar/bits.hpp"
#include "polar/tree.hpp"

namespace polar {

template <class A>
struct LeafCand {
  typename A::Pm delta{};  // metric penalty of this candidate
  BitVec beta;             // estimated bits of the node
};

template <typename Pm>
struct RankedCand {
  int parent = 0;  // index of the path that spawned the candidate
  int cand = 0;    // emission index within that path
  Pm pm{};         // metric after the penalty
};

// Keeps the min(L, size) smallest metrics. Candidates must be enumerated
// parent-major with per-path emission order; stable sort gives the tie rule.
template <typename Pm>
void select_best(std::vector<RankedCand<Pm>>& cands, int list_size) {
  std::stable_sort(cands.begin(), cands.end(),
                   [](const RankedCand<Pm>& a, const RankedCand<Pm>& b) { return a.pm < b.pm; });
  if (static_cast<int>(cands.size()) > list_size) {
    cands.resize(static_cast<std::size_t>(list_size));
  }
}

// Number of candidates a leaf of `kind` emits per path.
int leaf_cand_count(NodeKind kind, int length, int list_size);

namespace detail {

// Indices of the node positions ordered by (|alpha|, index) ascending.
template <class A>
void reliability_order(std::span<const typename A::Llr> alpha, std::vector<int>& order) {
  order.resize(alpha.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto ma = A::magnitude(alpha[static_cast<std::size_t>(a)]);
    const auto mb = A::magnitude(alpha[static_cast<std::size_t>(b)]);
    if (ma != mb) return ma < mb;
    return a < b;
  });
}

inline int ceil_log2(int v) {
  int b = 0;
  while ((1 << b) < v) ++b;
  return b;
}

// Enumerates flip subsets over the `t` least-reliable positions, keeps the
// `limit` cheapest (subset enumeration order breaks ties), and appends the
// resulting candidates. `parity` restricts to subsets of matching size parity
// (pass -1 for no constraint).
template <class A>
void emit_flip_candidates(const A& ar, std::span<const typename A::Llr> alpha,
                          const BitVec& hard, const std::vector<int>& order, int t, int parity,
                          int limit, std::vector<LeafCand<A>>& out) {
  using Pm = typename A::Pm;
  struct Sub {
    Pm delta;
    int mask;
  };
  std::vector<Sub> subs;
  subs.reserve(static_cast<std::size_t>(1) << t);
  for (int mask = 0; mask < (1 << t); ++mask) {
    if (parity >= 0 && (__builtin_popcount(static_cast<unsigned>(mask)) & 1) != parity) continue;
    Pm delta{};
    for (int b = 0; b < t; ++b) {
      if (mask & (1 << b)) {
        delta = ar.add_penalty(delta, A::magnitude(alpha[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])]));
      }
    }
    subs.push_back(Sub{delta, mask});
  }
  std::stable_sort(subs.begin(), subs.end(),
                   [](const Sub& a, const Sub& b) { return a.delta < b.delta; });
  const int count = std::min<int>(limit, static_cast<int>(subs.size()));
  for (int c = 0; c < count; ++c) {
    LeafCand<A> cand;
    cand.delta = subs[static_cast<std::size_t>(c)].delta;
    cand.beta = hard;
    for (int b = 0; b < t; ++b) {
      if (subs[static_cast<std::size_t>(c)].mask & (1 << b)) {
        cand.beta[static_cast<std::size_t>(order[static_cast<std::size_t>(b)])] ^= 1;
      }
    }
    out.push_back(std::move(cand));
  }
}

}  // namespace detail

// Candidates for one path at a leaf, ordered by (delta, emission index).
//
//   Rate-0      all-zero beta, penalty = sum of |alpha_i| over negative alpha_i.
//   Repetition  all-zero then all-one, with the opposing-sign penalties.
//   Rate-1      hard decision plus flips over the ceil(log2 L)+1 least-reliable
//               positions, at most L per path.
//   SPC         parity-corrected hard decision plus parity-preserving flips
//               over the 4 least-reliable positions, at most L per path.
template <class A>
void leaf_candidates(const A& ar, NodeKind kind, std::span<const typename A::Llr> alpha,
                     int list_size, std::vector<LeafCand<A>>& out) {
  using Pm = typename A::Pm;
  out.clear();
  const std::size_t len = alpha.size();
  switch (kind) {
    case NodeKind::Rate0: {
      LeafCand<A> cand;
      cand.beta.assign(len, 0);
      Pm delta{};
      for (const auto& a : alpha) {
        if (a < 0) delta = ar.add_penalty(delta, A::magnitude(a));
      }
      cand.delta = delta;
      out.push_back(std::move(cand));
      return;
    }
    case NodeKind::Repetition: {
      Pm zero_delta{}, one_delta{};
      for (const auto& a : alpha) {
        if (a < 0) zero_delta = ar.add_penalty(zero_delta, A::magnitude(a));
        if (a > 0) one_delta = ar.add_penalty(one_delta, A::magnitude(a));
      }
      LeafCand<A> zero, one;
      zero.beta.assign(len, 0);
      zero.delta = zero_delta;
      one.beta.assign(len, 1);
      one.delta = one_delta;
      out.push_back(std::move(zero));
      out.push_back(std::move(one));
      return;
    }
    case NodeKind::Rate1: {
      BitVec hard(len);
      for (std::size_t i = 0; i < len; ++i) hard[i] = alpha[i] < 0;
      std::vector<int> order;
      detail::reliability_order<A>(alpha, order);
      const int t = std::min<int>(detail::ceil_log2(list_size) + 1, static_cast<int>(len));
      detail::emit_flip_candidates(ar, alpha, hard, order, t, -1, list_size, out);
      return;
    }
    case NodeKind::Spc: {
      BitVec hard(len);
      int parity = 0;
      for (std::size_t i = 0; i < len; ++i) {
        hard[i] = alpha[i] < 0;
        parity ^= hard[i];
      }
      std::vector<int> order;
      detail::reliability_order<A>(alpha, order);
      const int t = std::min<int>(4, static_cast<int>(len));
      detail::emit_flip_candidates(ar, alpha, hard, order, t, parity, list_size, out);
      return;
    }
    case NodeKind::Branch: break;
  }
  throw std::invalid_argument("leaf_candidates: not a leaf kind");
}

}  // namespace polar
