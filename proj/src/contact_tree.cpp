#include "snakeforge/contact_tree.hpp"

#include <algorithm>
#include <functional>

#include "snakeforge/error.hpp"

namespace snakeforge {

ContactTree::ContactTree() { vertices_.push_back(Vertex{}); }

ContactTree::VertexId ContactTree::add_internal(VertexId parent, std::size_t valuation) {
  if (parent >= vertices_.size()) fail(ErrorKind::MalformedTree, "parent out of range");
  Vertex v;
  v.parent = parent;
  v.valuation = valuation;
  vertices_.push_back(std::move(v));
  VertexId id = vertices_.size() - 1;
  vertices_[parent].children.push_back(id);
  return id;
}

ContactTree::VertexId ContactTree::add_leaf(VertexId parent, std::optional<UniPoly> poly) {
  VertexId id = add_internal(parent, 0);
  vertices_[id].poly = std::move(poly);
  return id;
}

void ContactTree::number_leaves() {
  leaf_ids_.clear();
  std::vector<VertexId> stack{root()};
  while (!stack.empty()) {
    VertexId id = stack.back();
    stack.pop_back();
    const auto& ch = vertices_[id].children;
    if (ch.empty() && id != root()) {
      leaf_ids_.push_back(id);
      vertices_[id].leaf = leaf_ids_.size();
      continue;
    }
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
}

ContactTree::VertexId ContactTree::leaf_id(std::size_t i) const {
  if (i < 1 || i > leaf_ids_.size())
    fail(ErrorKind::IndexOutOfRange, "leaf " + std::to_string(i) + " of " + std::to_string(leaf_ids_.size()));
  return leaf_ids_[i - 1];
}

std::size_t ContactTree::depth(VertexId id) const {
  std::size_t d = 0;
  while (auto p = vertex(id).parent) {
    id = *p;
    ++d;
  }
  return d;
}

bool ContactTree::is_ancestor(VertexId a, VertexId b) const {
  auto p = vertex(b).parent;
  while (p) {
    if (*p == a) return true;
    p = vertex(*p).parent;
  }
  return false;
}

std::size_t ContactTree::leaves_below(VertexId id) const {
  if (is_leaf(id)) return 1;
  std::size_t total = 0;
  for (auto c : vertex(id).children) total += leaves_below(c);
  return total;
}

bool ContactTree::is_binary() const {
  if (!is_end_rooted()) return false;
  for (VertexId id = 1; id < vertices_.size(); ++id) {
    std::size_t k = vertices_[id].children.size();
    if (k != 0 && k != 2) return false;
  }
  return true;
}

bool ContactTree::valuations_increase() const {
  for (VertexId id = 1; id < vertices_.size(); ++id) {
    if (is_leaf(id)) continue;
    const auto parent = *vertices_[id].parent;
    std::size_t pv = parent == root() ? 0 : vertices_[parent].valuation;
    if (vertices_[id].valuation <= pv) return false;
  }
  return true;
}

std::vector<std::size_t> gap_valuations(std::span<const UniPoly> roots) {
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    Valuation v = valuation_x(roots[i + 1] - roots[i]);
    if (v.is_infinite()) fail(ErrorKind::DuplicateRoot, "roots " + std::to_string(i + 1) + " and " +
                                                           std::to_string(i + 2) + " coincide");
    e.push_back(v.value());
  }
  return e;
}

ContactTree contact_tree_of(std::span<const UniPoly> roots) {
  if (roots.empty()) fail(ErrorKind::InvalidArgument, "empty root family");
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].coeff(0) != 0)
      fail(ErrorKind::NonzeroConstantTerm, "root " + std::to_string(i + 1) + " = " + to_string(roots[i]));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        fail(ErrorKind::DuplicateRoot, "roots " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  for (std::size_t i = 0; i + 1 < roots.size(); ++i)
    if (!precedes_right(roots[i], roots[i + 1]))
      fail(ErrorKind::UnsortedRoots, "root " + std::to_string(i + 1) + " is not below root " + std::to_string(i + 2));

  const auto e = gap_valuations(roots);
  ContactTree t;
  // Leaves [lo, hi] under `parent`: split at every gap of minimal valuation.
  std::function<void(ContactTree::VertexId, std::size_t, std::size_t)> build =
      [&](ContactTree::VertexId parent, std::size_t lo, std::size_t hi) {
        if (lo == hi) {
          t.add_leaf(parent, roots[lo]);
          return;
        }
        std::size_t v = *std::min_element(e.begin() + static_cast<long>(lo), e.begin() + static_cast<long>(hi));
        auto id = t.add_internal(parent, v);
        std::size_t start = lo;
        for (std::size_t k = lo; k < hi; ++k) {
          if (e[k] != v) continue;
          build(id, start, k);
          start = k + 1;
        }
        build(id, start, hi);
      };
  build(t.root(), 0, roots.size() - 1);
  t.number_leaves();
  return t;
}

MeetVertex meet(const ContactTree& t, std::size_t i, std::size_t j) {
  if (i == j) fail(ErrorKind::IndexOutOfRange, "meet of a leaf with itself");
  auto a = t.leaf_id(i);
  auto b = t.leaf_id(j);
  std::size_t da = t.depth(a), db = t.depth(b);
  while (da > db) {
    a = *t.vertex(a).parent;
    --da;
  }
  while (db > da) {
    b = *t.vertex(b).parent;
    --db;
  }
  while (a != b) {
    a = *t.vertex(a).parent;
    b = *t.vertex(b).parent;
  }
  return {a, t.vertex(a).valuation};
}

std::size_t range_meet_valuation(const ContactTree& t, std::size_t i, std::size_t j) {
  if (i < 1 || j <= i || j > t.leaf_count())
    fail(ErrorKind::IndexOutOfRange, "range meet requires 1 <= i < j <= " + std::to_string(t.leaf_count()));
  std::size_t by_min = meet(t, i, i + 1).valuation;
  for (std::size_t k = i + 1; k < j; ++k) by_min = std::min(by_min, meet(t, k, k + 1).valuation);
  std::size_t direct = meet(t, i, j).valuation;
  if (by_min != direct)
    fail(ErrorKind::ContractViolation, "range meet " + std::to_string(by_min) + " != meet valuation " +
                                           std::to_string(direct));
  return direct;
}

std::vector<UniPoly> realize_tree(const ContactTree& shape, ValuationPolicy policy) {
  if (!shape.is_end_rooted()) fail(ErrorKind::NotEndRooted, "root must have exactly one child");
  if (!shape.is_binary()) fail(ErrorKind::NotBinary, "every bifurcation must have exactly two children");
  if (policy == ValuationPolicy::ShapeSupplied && !shape.valuations_increase())
    fail(ErrorKind::InvalidArgument, "supplied valuations must strictly increase away from the root");

  std::vector<UniPoly> out;
  std::function<void(ContactTree::VertexId, const UniPoly&)> walk = [&](ContactTree::VertexId id,
                                                                         const UniPoly& acc) {
    const auto& v = shape.vertex(id);
    if (v.children.empty()) {
      out.push_back(acc);
      return;
    }
    std::size_t nu = policy == ValuationPolicy::Depth ? shape.depth(id) : v.valuation;
    walk(v.children[0], acc);
    walk(v.children[1], acc + UniPoly::monomial(1, nu));
  };
  // The root's edge carries coefficient 0.
  walk(shape.vertex(shape.root()).children.front(), UniPoly());
  return out;
}

bool tree_isomorphic(const ContactTree& a, const ContactTree& b) {
  std::function<bool(ContactTree::VertexId, ContactTree::VertexId)> eq = [&](ContactTree::VertexId x,
                                                                             ContactTree::VertexId y) {
    const auto& cx = a.vertex(x).children;
    const auto& cy = b.vertex(y).children;
    if (cx.size() != cy.size()) return false;
    for (std::size_t k = 0; k < cx.size(); ++k)
      if (!eq(cx[k], cy[k])) return false;
    return true;
  };
  return eq(a.root(), b.root());
}

ContactTree contact_shape_of(const SignedTree& t) {
  t.check_structure();
  ContactTree shape;
  std::function<void(SignedTree::NodeId, ContactTree::VertexId, std::size_t)> rec =
      [&](SignedTree::NodeId id, ContactTree::VertexId parent, std::size_t depth) {
        const auto& n = t.node(id);
        if (n.leaf) {
          shape.add_leaf(parent);
          return;
        }
        auto v = shape.add_internal(parent, depth);
        rec(n.left, v, depth + 1);
        rec(n.right, v, depth + 1);
      };
  rec(t.root(), shape.root(), 1);
  shape.number_leaves();
  return shape;
}

}  // namespace snakeforge
