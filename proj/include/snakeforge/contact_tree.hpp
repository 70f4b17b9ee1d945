#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "snakeforge/poly.hpp"
#include "snakeforge/separating_tree.hpp"

namespace snakeforge {

/// Rooted plane tree recording the pairwise contact orders of a ≺₊-sorted
/// family of polynomials vanishing at 0.
///
/// Vertex 0 is the root. Bifurcation vertices carry the valuation nu_x of the
/// gap between the families on either side; valuations strictly increase
/// along every root-to-leaf path. Leaves are numbered 1..n left to right once
/// number_leaves() has run, and may carry the polynomial they stand for.
class ContactTree {
 public:
  using VertexId = std::size_t;

  struct Vertex {
    std::optional<VertexId> parent;
    std::vector<VertexId> children;
    std::size_t valuation = 0;  // internal vertices; the root carries 0
    std::size_t leaf = 0;       // 1-based leaf index, 0 for internal vertices
    std::optional<UniPoly> poly;
  };

  ContactTree();

  VertexId root() const { return 0; }
  const Vertex& vertex(VertexId id) const { return vertices_.at(id); }
  std::size_t vertex_count() const { return vertices_.size(); }

  VertexId add_internal(VertexId parent, std::size_t valuation);
  VertexId add_leaf(VertexId parent, std::optional<UniPoly> poly = std::nullopt);
  // Assigns 1-based leaf indices in plane order; call after construction.
  void number_leaves();

  bool is_leaf(VertexId id) const { return vertex(id).children.empty() && id != root(); }
  std::size_t leaf_count() const { return leaf_ids_.size(); }
  // Vertex id of the i-th leaf (1-based).
  VertexId leaf_id(std::size_t i) const;
  std::size_t depth(VertexId id) const;
  // True when `a` is a proper ancestor of `b`.
  bool is_ancestor(VertexId a, VertexId b) const;
  // Leaves in the subtree of `id`.
  std::size_t leaves_below(VertexId id) const;

  bool is_end_rooted() const { return vertex(root()).children.size() == 1; }
  // End-rooted and every non-root internal vertex has exactly two children.
  bool is_binary() const;
  // Valuations strictly increase along root-to-leaf paths (root counts as 0).
  bool valuations_increase() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<VertexId> leaf_ids_;
};

// Builds the contact tree of a ≺₊-sorted family with a_i(0) = 0. Bifurcation
// valuations are the gap valuations e_i; equal minimal gaps merge into one
// vertex, so non-binary trees arise. Throws UnsortedRoots, DuplicateRoot,
// NonzeroConstantTerm.
ContactTree contact_tree_of(std::span<const UniPoly> roots);

struct MeetVertex {
  ContactTree::VertexId id;
  std::size_t valuation;
  friend bool operator==(const MeetVertex&, const MeetVertex&) = default;
};

// Deepest common ancestor of leaves i and j (1-based, i != j).
MeetVertex meet(const ContactTree& t, std::size_t i, std::size_t j);

// min over adjacent meet valuations in [i, j), checked against the valuation
// of meet(i, j). Throws ContractViolation if the two disagree.
std::size_t range_meet_valuation(const ContactTree& t, std::size_t i, std::size_t j);

enum class ValuationPolicy {
  Depth,          // valuation of a vertex = its depth below the root
  ShapeSupplied,  // use the valuations stored in the shape
};

// Polynomials whose contact tree is plane-isomorphic to `shape`: the first
// child edge of each bifurcation contributes 0, the second 1 * x^valuation.
// Throws NotEndRooted, NotBinary, or InvalidArgument when supplied valuations
// do not strictly increase.
std::vector<UniPoly> realize_tree(const ContactTree& shape, ValuationPolicy policy = ValuationPolicy::Depth);

// Same plane shape, root to root, ignoring valuations.
bool tree_isomorphic(const ContactTree& a, const ContactTree& b);

// End-rooted contact shape of a separating tree: an extra root above the
// tree's root, internal vertices valued by depth. Signs are dropped.
ContactTree contact_shape_of(const SignedTree& t);

// Gap valuations e_i = nu_x(a_{i+1} - a_i).
std::vector<std::size_t> gap_valuations(std::span<const UniPoly> roots);

}  // namespace snakeforge
