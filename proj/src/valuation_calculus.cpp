#include "snakeforge/valuation_calculus.hpp"

#include <algorithm>

#include "snakeforge/error.hpp"

namespace snakeforge {

namespace {

void require_binary(const ContactTree& t) {
  if (!t.is_binary()) fail(ErrorKind::NonBinaryTree, "valuation formulas need a complete binary contact tree");
}

void require_area_index(const ContactTree& t, std::size_t i) {
  const std::size_t m = t.leaf_count() == 0 ? 0 : t.leaf_count() - 1;
  if (i < 1 || i > m) fail(ErrorKind::IndexOutOfRange, "area index " + std::to_string(i) + " outside 1.." + std::to_string(m));
}

}  // namespace

AreaProfile area_valuation(const ContactTree& t, std::size_t i) {
  require_binary(t);
  require_area_index(t, i);
  const MeetVertex target = meet(t, i, i + 1);

  // Geodesic from the root's child down to the target vertex.
  std::vector<ContactTree::VertexId> geodesic;
  for (auto v = target.id; v != t.root(); v = *t.vertex(v).parent) geodesic.push_back(v);
  std::reverse(geodesic.begin(), geodesic.end());

  AreaProfile profile;
  profile.index = i;
  profile.gap_valuation = target.valuation;
  profile.side = area_side(i, t.leaf_count() - 1);
  profile.valuation = target.valuation;
  for (std::size_t k = 0; k < geodesic.size(); ++k) {
    const auto g = geodesic[k];
    std::size_t count = t.leaves_below(g);
    if (k + 1 < geodesic.size()) count -= t.leaves_below(geodesic[k + 1]);
    const std::size_t nu = t.vertex(g).valuation;
    profile.terms.push_back({g, nu, count});
    profile.valuation += count * nu;
  }
  return profile;
}

std::vector<std::size_t> q_coefficients(const ContactTree& t, const AreaProfile& profile) {
  const std::size_t m = t.leaf_count() - 1;
  std::vector<std::size_t> q(m, 0);
  for (const auto& term : profile.terms) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (meet(t, j, j + 1).id == term.vertex) {
        q[j - 1] += term.leaf_count;
        break;
      }
    }
  }
  return q;
}

UniPoly signed_area_integral(std::span<const UniPoly> roots, std::size_t i) {
  if (i < 1 || i >= roots.size()) fail(ErrorKind::IndexOutOfRange, "area index " + std::to_string(i));
  BiPoly p = product_of_linear_factors(roots);
  return definite_integral_y(p, roots[i - 1], roots[i]);
}

UniPoly area_polynomial(std::span<const UniPoly> roots, std::size_t i) {
  UniPoly s = signed_area_integral(roots, i);
  if (s.is_zero()) fail(ErrorKind::DuplicateRoot, "area " + std::to_string(i) + " vanishes identically");
  return lowest_coefficient(s) < 0 ? -s : s;
}

std::size_t area_valuation_oracle(std::span<const UniPoly> roots, std::size_t i) {
  // Same preconditions as the tree construction.
  (void)contact_tree_of(roots);
  return valuation_x(area_polynomial(roots, i)).value();
}

Side area_side(std::size_t i, std::size_t m) {
  if (i < 1 || i > m) fail(ErrorKind::IndexOutOfRange, "area index " + std::to_string(i) + " outside 1.." + std::to_string(m));
  return (m + 1 - i) % 2 == 0 ? Side::Above : Side::Below;
}

AreaOrder compare_areas(const ContactTree& t, std::size_t k, std::size_t l) {
  require_binary(t);
  require_area_index(t, k);
  require_area_index(t, l);
  if (k == l) fail(ErrorKind::InvalidArgument, "compare_areas needs two distinct areas");
  auto vk = meet(t, k, k + 1).id;
  auto vl = meet(t, l, l + 1).id;
  if (t.is_ancestor(vk, vl)) return AreaOrder::Greater;
  if (t.is_ancestor(vl, vk)) return AreaOrder::Less;
  return AreaOrder::Incomparable;
}

std::size_t dominant_area_index(const ContactTree& t, std::size_t i, std::size_t j) {
  require_binary(t);
  if (i < 1 || j <= i || j > t.leaf_count())
    fail(ErrorKind::IndexOutOfRange, "need 1 <= i < j <= " + std::to_string(t.leaf_count()));
  const auto target = meet(t, i, j).id;
  for (std::size_t k = i; k < j; ++k)
    if (meet(t, k, k + 1).id == target) return k;
  fail(ErrorKind::ContractViolation, "no adjacent pair in range meets at meet(i, j)");
}

std::size_t sum_valuation(const ContactTree& t, std::size_t i, std::size_t j, std::span<const int> signs) {
  const std::size_t k = dominant_area_index(t, i, j);
  if (signs.size() != j - i) fail(ErrorKind::InvalidArgument, "need one sign per area in the range");
  for (int s : signs)
    if (s != 1 && s != -1) fail(ErrorKind::InvalidArgument, "signs must be +1 or -1");
  return area_valuation(t, k).valuation;
}

Valuation sum_valuation_oracle(std::span<const UniPoly> roots, std::size_t i, std::size_t j,
                               std::span<const int> signs) {
  if (i < 1 || j <= i || j > roots.size() || signs.size() != j - i)
    fail(ErrorKind::IndexOutOfRange, "bad range for sum_valuation_oracle");
  UniPoly acc;
  for (std::size_t k = i; k < j; ++k) {
    UniPoly s = area_polynomial(roots, k);
    acc += signs[k - i] > 0 ? s : -s;
  }
  return valuation_x(acc);
}

}  // namespace snakeforge
