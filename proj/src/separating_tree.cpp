#include "snakeforge/separating_tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "snakeforge/error.hpp"

namespace snakeforge {

SignedTree::NodeId SignedTree::add_leaf(int label) {
  Node n;
  n.leaf = true;
  n.label = label;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

SignedTree::NodeId SignedTree::add_node(Sign sign, NodeId left, NodeId right) {
  Node n;
  n.leaf = false;
  n.sign = sign;
  n.left = left;
  n.right = right;
  nodes_.push_back(n);
  return nodes_.size() - 1;
}

void SignedTree::check_structure() const {
  if (nodes_.empty()) fail(ErrorKind::MalformedTree, "empty tree");
  if (root_ >= nodes_.size()) fail(ErrorKind::MalformedTree, "root out of range");
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (seen[id]) fail(ErrorKind::MalformedTree, "node reachable twice");
    seen[id] = true;
    const Node& n = nodes_[id];
    if (n.leaf) continue;
    if (n.left >= nodes_.size() || n.right >= nodes_.size())
      fail(ErrorKind::MalformedTree, "child index out of range");
    stack.push_back(n.right);
    stack.push_back(n.left);
  }
}

std::vector<SignedTree::NodeId> SignedTree::leaves() const {
  std::vector<NodeId> out;
  if (nodes_.empty()) return out;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = nodes_.at(id);
    if (n.leaf) {
      out.push_back(id);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

std::size_t SignedTree::internal_count() const {
  std::size_t leaves_n = leaf_count();
  return leaves_n == 0 ? 0 : leaves_n - 1;
}

bool SignedTree::same_shape(const SignedTree& other) const {
  std::function<bool(NodeId, NodeId)> eq = [&](NodeId a, NodeId b) {
    const Node& x = node(a);
    const Node& y = other.node(b);
    if (x.leaf != y.leaf) return false;
    if (x.leaf) return true;
    return x.sign == y.sign && eq(x.left, y.left) && eq(x.right, y.right);
  };
  return !empty() && !other.empty() && eq(root_, other.root_);
}

SignedTree SignedTree::relabeled() const {
  Permutation p = permutation_of_tree(*this);
  SignedTree copy = *this;
  auto ids = leaves();
  for (std::size_t i = 0; i < ids.size(); ++i) copy.nodes_[ids[i]].label = p(i + 1);
  return copy;
}

// ---------------------------------------------------------------- build

namespace {

struct Builder {
  const std::vector<int>& v;
  SignedTree tree;
  bool failed = false;

  // Block [lo, hi) of positions whose values form an integer interval.
  SignedTree::NodeId build(std::size_t lo, std::size_t hi, int vmin, int vmax) {
    if (hi - lo == 1) return tree.add_leaf(v[lo]);
    int pmin = std::numeric_limits<int>::max();
    int pmax = std::numeric_limits<int>::min();
    for (std::size_t k = lo + 1; k < hi && !failed; ++k) {
      pmin = std::min(pmin, v[k - 1]);
      pmax = std::max(pmax, v[k - 1]);
      const int len = static_cast<int>(k - lo);
      if (pmax - pmin + 1 != len) continue;
      if (pmin == vmin) {
        auto left = build(lo, k, pmin, pmax);
        auto right = build(k, hi, pmax + 1, vmax);
        return tree.add_node(Sign::Plus, left, right);
      }
      if (pmax == vmax) {
        auto left = build(lo, k, pmin, pmax);
        auto right = build(k, hi, vmin, pmin - 1);
        return tree.add_node(Sign::Minus, left, right);
      }
    }
    failed = true;
    return 0;
  }
};

}  // namespace

std::optional<SignedTree> try_build_separating_tree(const Permutation& p) {
  if (p.size() == 0) return std::nullopt;
  Builder b{p.images(), {}};
  auto root = b.build(0, p.size(), 1, static_cast<int>(p.size()));
  if (b.failed) return std::nullopt;
  b.tree.set_root(root);
  return std::move(b.tree);
}

SignedTree build_separating_tree(const Permutation& p) {
  if (p.size() == 0) fail(ErrorKind::InvalidPermutation, "empty permutation");
  auto t = try_build_separating_tree(p);
  if (!t) fail(ErrorKind::NotSeparable, to_string(p) + " has no binary separating tree");
  return std::move(*t);
}

Permutation permutation_of_tree(const SignedTree& t) {
  t.check_structure();
  std::function<Permutation(SignedTree::NodeId)> rec = [&](SignedTree::NodeId id) {
    const auto& n = t.node(id);
    if (n.leaf) return Permutation::identity(1);
    Permutation l = rec(n.left);
    Permutation r = rec(n.right);
    return n.sign == Sign::Plus ? direct_sum(l, r) : skew_sum(l, r);
  };
  return rec(t.root());
}

namespace {

// Path of node ids from the root to each leaf, in leaf order.
std::vector<std::vector<SignedTree::NodeId>> leaf_paths(const SignedTree& t) {
  std::vector<std::vector<SignedTree::NodeId>> out;
  std::vector<SignedTree::NodeId> path;
  std::function<void(SignedTree::NodeId)> rec = [&](SignedTree::NodeId id) {
    path.push_back(id);
    const auto& n = t.node(id);
    if (n.leaf) {
      out.push_back(path);
    } else {
      rec(n.left);
      rec(n.right);
    }
    path.pop_back();
  };
  rec(t.root());
  return out;
}

}  // namespace

Sign meet_sign(const SignedTree& t, std::size_t i, std::size_t j) {
  t.check_structure();
  auto paths = leaf_paths(t);
  if (i < 1 || j <= i || j > paths.size())
    fail(ErrorKind::IndexOutOfRange, "meet_sign requires 1 <= i < j <= " + std::to_string(paths.size()));
  const auto& a = paths[i - 1];
  const auto& b = paths[j - 1];
  std::size_t d = 0;
  while (d + 1 < a.size() && d + 1 < b.size() && a[d + 1] == b[d + 1]) ++d;
  return t.node(a[d]).sign;
}

bool signs_alternate(const SignedTree& t) {
  t.check_structure();
  // In-order internal signs are the signs of the adjacent-leaf meets.
  std::vector<Sign> inorder;
  std::vector<SignedTree::NodeId> stack;
  auto id = t.root();
  while (true) {
    while (!t.node(id).leaf) {
      stack.push_back(id);
      id = t.node(id).left;
    }
    if (stack.empty()) break;
    id = stack.back();
    stack.pop_back();
    inorder.push_back(t.node(id).sign);
    id = t.node(id).right;
  }
  for (std::size_t k = 1; k < inorder.size(); ++k)
    if (inorder[k] == inorder[k - 1]) return false;
  return true;
}

Sign rightmost_sign(const SignedTree& t) {
  t.check_structure();
  std::size_t n = t.leaf_count();
  if (n < 2) fail(ErrorKind::LeafOnly, "tree has no internal node");
  return meet_sign(t, n - 1, n);
}

bool is_valid_separating_tree(const SignedTree& t, const Permutation& p) {
  try {
    t.check_structure();
  } catch (const Error&) {
    return false;
  }
  auto ids = t.leaves();
  if (ids.size() != p.size()) return false;
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (t.node(ids[i]).label != p(i + 1)) return false;

  struct Span {
    int lo, hi;
    bool ok;
  };
  std::function<Span(SignedTree::NodeId)> rec = [&](SignedTree::NodeId id) -> Span {
    const auto& n = t.node(id);
    if (n.leaf) return {n.label, n.label, true};
    Span l = rec(n.left);
    Span r = rec(n.right);
    if (!l.ok || !r.ok) return {0, 0, false};
    // The two children's value intervals must abut, in the order the sign says.
    bool ok = n.sign == Sign::Plus ? l.hi + 1 == r.lo : r.hi + 1 == l.lo;
    return {std::min(l.lo, r.lo), std::max(l.hi, r.hi), ok};
  };
  return rec(t.root()).ok;
}

}  // namespace snakeforge
