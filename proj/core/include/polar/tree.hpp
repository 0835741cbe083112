// Decoder-tree derivation: recursive classification of constituent codes.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "polar/code.hpp"

namespace polar {

enum class NodeKind { Rate0, Rate1, Repetition, Spc, Branch };

std::string to_string(NodeKind k);

// Per-kind maximum leaf lengths; 0 means unconstrained. Defaults follow the
// implemented decoder: Rate-0/Repetition up to 8, SPC up to 4, Rate-1 open.
struct NodeCaps {
  int rate0 = 8;
  int rate1 = 0;
  int repetition = 8;
  int spc = 4;

  void validate() const;  // non-zero caps must be powers of two
  bool allows(NodeKind kind, int length) const;
};

struct TreeNode {
  NodeKind kind = NodeKind::Branch;
  int begin = 0;    // first covered codeword position
  int length = 0;   // covered positions (power of two)
  int depth = 0;
  int left = -1;    // child indices, Branch only
  int right = -1;

  bool is_leaf() const { return kind != NodeKind::Branch; }
};

struct LeafCensus {
  int leaves = 0;
  std::array<int, 4> count{};       // indexed by NodeKind value (Rate0..Spc)
  std::array<int, 4> max_length{};
};

struct DecoderTree {
  int block_length = 0;
  int root = 0;
  std::vector<TreeNode> nodes;

  const TreeNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
  LeafCensus census() const;
  int max_depth() const;
};

// Splits recursively; a node becomes a leaf of kind K only if its frozen
// pattern matches K and its length fits caps. Length-1 positions always
// terminate as Rate0/Rate1. Pattern precedence on the ambiguous length-2
// case (one frozen bit first): Repetition.
DecoderTree build_decoder_tree(const PolarCode& code, const NodeCaps& caps = {});

// Throws std::invalid_argument if the tree does not describe `code`
// (leaf coverage or frozen patterns disagree).
void validate_tree(const DecoderTree& tree, const PolarCode& code);

std::string tree_census_table(const DecoderTree& tree);

}  // namespace polar
