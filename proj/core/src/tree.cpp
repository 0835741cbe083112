#include "polar/tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace polar {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Rate0: return "rate0";
    case NodeKind::Rate1: return "rate1";
    case NodeKind::Repetition: return "repetition";
    case NodeKind::Spc: return "spc";
    case NodeKind::Branch: return "branch";
  }
  return "?";
}

void NodeCaps::validate() const {
  for (int cap : {rate0, rate1, repetition, spc}) {
    if (cap < 0 || (cap != 0 && !is_power_of_two(static_cast<std::size_t>(cap)))) {
      throw std::invalid_argument("node caps must be powers of two (0 = unconstrained)");
    }
  }
}

bool NodeCaps::allows(NodeKind kind, int length) const {
  int cap = 0;
  switch (kind) {
    case NodeKind::Rate0: cap = rate0; break;
    case NodeKind::Rate1: cap = rate1; break;
    case NodeKind::Repetition: cap = repetition; break;
    case NodeKind::Spc: cap = spc; break;
    case NodeKind::Branch: return true;
  }
  return cap == 0 || length <= cap;
}

LeafCensus DecoderTree::census() const {
  LeafCensus c;
  for (const TreeNode& n : nodes) {
    if (!n.is_leaf()) continue;
    ++c.leaves;
    const std::size_t idx = static_cast<std::size_t>(n.kind);
    ++c.count[idx];
    c.max_length[idx] = std::max(c.max_length[idx], n.length);
  }
  return c;
}

int DecoderTree::max_depth() const {
  int d = 0;
  for (const TreeNode& n : nodes) d = std::max(d, n.depth);
  return d;
}

namespace {

// Frozen-pattern classification of [begin, begin+len); Branch if none fits.
NodeKind classify(const BitVec& frozen, int begin, int len, const NodeCaps& caps) {
  int count = 0;
  for (int i = 0; i < len; ++i) count += frozen[static_cast<std::size_t>(begin + i)];
  if (count == len && caps.allows(NodeKind::Rate0, len)) return NodeKind::Rate0;
  if (count == 0 && caps.allows(NodeKind::Rate1, len)) return NodeKind::Rate1;
  if (count == len - 1 && !frozen[static_cast<std::size_t>(begin + len - 1)] &&
      caps.allows(NodeKind::Repetition, len)) {
    return NodeKind::Repetition;
  }
  if (len >= 2 && count == 1 && frozen[static_cast<std::size_t>(begin)] &&
      caps.allows(NodeKind::Spc, len)) {
    return NodeKind::Spc;
  }
  return NodeKind::Branch;
}

}  // namespace

DecoderTree build_decoder_tree(const PolarCode& code, const NodeCaps& caps) {
  caps.validate();
  DecoderTree tree;
  tree.block_length = code.N;

  std::function<int(int, int, int)> build = [&](int begin, int len, int depth) -> int {
    const NodeKind kind = classify(code.frozen, begin, len, caps);
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{kind, begin, len, depth, -1, -1});
    if (kind == NodeKind::Branch) {
      if (len < 2) throw std::logic_error("length-1 node failed to classify");
      const int left = build(begin, len / 2, depth + 1);
      const int right = build(begin + len / 2, len / 2, depth + 1);
      tree.nodes[static_cast<std::size_t>(id)].left = left;
      tree.nodes[static_cast<std::size_t>(id)].right = right;
    }
    return id;
  };
  tree.root = build(0, code.N, 0);
  return tree;
}

void validate_tree(const DecoderTree& tree, const PolarCode& code) {
  if (tree.block_length != code.N) {
    throw std::invalid_argument("decoder tree block length differs from code");
  }
  int covered = 0;
  for (const TreeNode& n : tree.nodes) {
    if (!n.is_leaf()) continue;
    covered += n.length;
    int count = 0;
    for (int i = 0; i < n.length; ++i) count += code.frozen[static_cast<std::size_t>(n.begin + i)];
    bool ok = false;
    switch (n.kind) {
      case NodeKind::Rate0: ok = count == n.length; break;
      case NodeKind::Rate1: ok = count == 0; break;
      case NodeKind::Repetition:
        ok = count == n.length - 1 && !code.frozen[static_cast<std::size_t>(n.begin + n.length - 1)];
        break;
      case NodeKind::Spc:
        ok = count == 1 && code.frozen[static_cast<std::size_t>(n.begin)];
        break;
      case NodeKind::Branch: ok = false; break;
    }
    if (!ok) throw std::invalid_argument("decoder tree does not match the code's frozen mask");
  }
  if (covered != code.N) throw std::invalid_argument("decoder tree leaves do not cover the code");
}

std::string tree_census_table(const DecoderTree& tree) {
  const LeafCensus c = tree.census();
  std::ostringstream out;
  out << "leaves: " << c.leaves << '\n';
  const NodeKind kinds[] = {NodeKind::Rate0, NodeKind::Rate1, NodeKind::Repetition, NodeKind::Spc};
  for (NodeKind k : kinds) {
    const std::size_t i = static_cast<std::size_t>(k);
    out << "  " << to_string(k) << ": " << c.count[i];
    if (c.count[i] > 0) out << " (max length " << c.max_length[i] << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace polar
