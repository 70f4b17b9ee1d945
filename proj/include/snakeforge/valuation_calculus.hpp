#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "snakeforge/contact_tree.hpp"
#include "snakeforge/poly.hpp"

namespace snakeforge {

enum class Side { Above, Below };

/// Valuation of the area S_i between consecutive roots, read off the
/// contact tree, together with the per-vertex leaf counts that produced it.
struct AreaProfile {
  struct Term {
    ContactTree::VertexId vertex;
    std::size_t vertex_valuation;
    std::size_t leaf_count;  // leaves whose deepest ancestor on the geodesic is `vertex`
  };

  std::size_t index = 0;
  std::size_t gap_valuation = 0;  // e_i
  std::size_t valuation = 0;
  Side side = Side::Below;
  std::vector<Term> terms;  // geodesic vertices from the root's child down to meet(i, i+1)
};

// nu_x(S_i) = e_i + sum over geodesic vertices G of c_G * nu_x(G). Requires a
// binary tree. Throws NonBinaryTree, IndexOutOfRange.
AreaProfile area_valuation(const ContactTree& t, std::size_t i);

// q_{ij} coefficients: valuation = e_i + sum_j q[j] * e_j, where q[j-1] is the
// leaf count of the geodesic vertex equal to meet(j, j+1) (binary trees make
// that vertex unique).
std::vector<std::size_t> q_coefficients(const ContactTree& t, const AreaProfile& profile);

// S_i as an exact polynomial in x: the integral of prod (y - a_k) between
// consecutive roots, made positive for small x > 0.
UniPoly area_polynomial(std::span<const UniPoly> roots, std::size_t i);
// Signed integral of prod (y - a_k) from a_i to a_{i+1}.
UniPoly signed_area_integral(std::span<const UniPoly> roots, std::size_t i);

// nu_x(S_i) by exact expansion and integration.
std::size_t area_valuation_oracle(std::span<const UniPoly> roots, std::size_t i);

// Above iff m + 1 - i is even. Throws IndexOutOfRange unless 1 <= i <= m.
Side area_side(std::size_t i, std::size_t m);

enum class AreaOrder { Greater, Less, Incomparable };

// Greater means S_k ≻₊ S_l. Ordered only when meet(k, k+1) and meet(l, l+1)
// are comparable in the tree.
AreaOrder compare_areas(const ContactTree& t, std::size_t k, std::size_t l);

// Index k in [i, j) whose adjacent meet is meet(i, j).
std::size_t dominant_area_index(const ContactTree& t, std::size_t i, std::size_t j);

// nu_x(±S_i ± ... ± S_{j-1}); independent of the signs.
std::size_t sum_valuation(const ContactTree& t, std::size_t i, std::size_t j, std::span<const int> signs);

// Same quantity from the exact signed sum of area polynomials.
Valuation sum_valuation_oracle(std::span<const UniPoly> roots, std::size_t i, std::size_t j,
                               std::span<const int> signs);

}  // namespace snakeforge
