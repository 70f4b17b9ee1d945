#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "snakeforge/permutation.hpp"

namespace snakeforge {

enum class Sign { Plus, Minus };

inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Complete plane binary tree with signed internal nodes: a binary separating
/// tree of a separable permutation. Nodes live in an arena; children are
/// indices into it. Leaves carry the permutation value they stand for.
class SignedTree {
 public:
  using NodeId = std::size_t;

  struct Node {
    bool leaf = true;
    int label = 0;  // leaf only; 0 when unlabeled
    Sign sign = Sign::Plus;  // internal only
    NodeId left = 0;
    NodeId right = 0;
  };

  SignedTree() = default;

  NodeId add_leaf(int label);
  NodeId add_node(Sign sign, NodeId left, NodeId right);
  void set_root(NodeId root) { root_ = root; }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  // Leaf ids in left-to-right order.
  std::vector<NodeId> leaves() const;
  std::size_t leaf_count() const { return leaves().size(); }
  std::size_t internal_count() const;

  // Throws MalformedTree if children are out of range, shared, or cyclic.
  void check_structure() const;

  // Shape and signs, ignoring leaf labels.
  bool same_shape(const SignedTree& other) const;

  // Copy with leaf labels replaced by permutation_of_tree's values.
  SignedTree relabeled() const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

// Canonical binary separating tree: every block splits at its shortest prefix
// that is a valid direct- or skew-sum component. Throws NotSeparable.
SignedTree build_separating_tree(const Permutation& p);
// Same construction; nullopt instead of NotSeparable.
std::optional<SignedTree> try_build_separating_tree(const Permutation& p);

// Unique permutation whose binary decomposition is the tree. Leaf labels are
// ignored. Throws MalformedTree.
Permutation permutation_of_tree(const SignedTree& t);

// Sign of the deepest common ancestor of the i-th and j-th leaves (1-based,
// i < j). Throws IndexOutOfRange.
Sign meet_sign(const SignedTree& t, std::size_t i, std::size_t j);

// Internal node signs, read in order (the adjacent-leaf meets), alternate.
bool signs_alternate(const SignedTree& t);

// Sign of the meet of the last two leaves. Throws LeafOnly.
Sign rightmost_sign(const SignedTree& t);

// Full invariant check of a labeled separating tree: frontier spells p, every
// internal node covers an integer interval, and signs match the block order.
bool is_valid_separating_tree(const SignedTree& t, const Permutation& p);

}  // namespace snakeforge
