#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "snakeforge/contact_tree.hpp"
#include "snakeforge/permutation.hpp"
#include "snakeforge/poly.hpp"
#include "snakeforge/separating_tree.hpp"

namespace snakeforge {

/// Everything produced while turning a separable snake into a Morse
/// polynomial Q_x(y) whose Arnold snake it is.
struct RealizationResult {
  Permutation sigma;
  SignedTree tree;
  std::vector<UniPoly> roots;             // a_i(x), the critical points of Q_x
  BiPoly p;                               // prod (y - a_i(x))
  BiPoly q;                               // (m + 2) * integral_0^y P
  std::vector<UniPoly> critical_polys;    // c_i(x) = Q_x(a_i(x))
  Rational witness_x;
  unsigned witness_halvings = 0;          // witness_x = 2^-witness_halvings
  std::vector<Rational> critical_values;  // c_i(witness_x)
  Permutation verified_snake;
};

struct WitnessOptions {
  unsigned max_halvings = 256;
};

// Throws NotASnake, WrongOrientation, NotSeparable, WitnessSearchExhausted;
// ContractViolation if the symbolic order of the c_i disagrees with sigma.
RealizationResult realize_snake(const Permutation& sigma, WitnessOptions options = {});

// Q(x0, a_i(x0)) for every root.
std::vector<Rational> critical_values_at(const BiPoly& q, std::span<const UniPoly> roots, const Rational& x0);

// Largest x0 = 2^-k (k >= 1) such that at x0 and x0/2 the critical points
// a_i(x0) are distinct, the critical values are distinct, and their ranks
// spell sigma. Throws WitnessSearchExhausted.
Rational find_witness(const BiPoly& q, std::span<const UniPoly> roots, const Permutation& sigma,
                      WitnessOptions options = {});

struct SignedAreaTerm {
  std::size_t index;
  int sign;  // (-1)^(m + 1 - index)
  friend bool operator==(const SignedAreaTerm&, const SignedAreaTerm&) = default;
};

// c_j - c_i = (m + 2) * sum over the listed areas of sign * S_index.
std::vector<SignedAreaTerm> difference_decomposition(std::size_t i, std::size_t j, std::size_t m);

// For every pair i < j: sign of the c_j - c_i polynomial for small x > 0
// compared with sigma. Returns the pairs that disagree.
std::vector<std::pair<std::size_t, std::size_t>> symbolic_order_mismatches(std::span<const UniPoly> critical_polys,
                                                                           const Permutation& sigma);

}  // namespace snakeforge
