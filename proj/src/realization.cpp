#include "snakeforge/realization.hpp"

#include <algorithm>

#include "snakeforge/error.hpp"

namespace snakeforge {

std::vector<Rational> critical_values_at(const BiPoly& q, std::span<const UniPoly> roots, const Rational& x0) {
  std::vector<Rational> out;
  out.reserve(roots.size());
  for (const auto& a : roots) out.push_back(q(x0, a(x0)));
  return out;
}

namespace {

bool pairwise_distinct(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Morse at x0 with the expected snake. `critical_polys` are the c_i(x).
bool witness_holds(std::span<const UniPoly> roots, std::span<const UniPoly> critical_polys, const Permutation& sigma,
                   const Rational& x0) {
  std::vector<Rational> points;
  points.reserve(roots.size());
  for (const auto& a : roots) points.push_back(a(x0));
  if (!pairwise_distinct(points)) return false;
  std::vector<Rational> values;
  values.reserve(critical_polys.size());
  for (const auto& c : critical_polys) values.push_back(c(x0));
  if (!pairwise_distinct(values)) return false;
  // Ranks only; alternation follows from matching a snake.
  std::vector<std::size_t> order(values.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t r = 0; r < order.size(); ++r)
    if (sigma(order[r] + 1) != static_cast<int>(r + 1)) return false;
  return true;
}

std::vector<UniPoly> critical_polynomials(const BiPoly& q, std::span<const UniPoly> roots) {
  std::vector<UniPoly> out;
  out.reserve(roots.size());
  for (const auto& a : roots) out.push_back(compose_y(q, a));
  return out;
}

Rational search_witness(std::span<const UniPoly> roots, std::span<const UniPoly> critical_polys,
                        const Permutation& sigma, WitnessOptions options, unsigned* halvings) {
  if (roots.size() != sigma.size())
    fail(ErrorKind::InvalidArgument, "need one root per permutation entry");
  bool previous_holds = false;
  for (unsigned k = 1; k <= options.max_halvings + 1; ++k) {
    bool holds = witness_holds(roots, critical_polys, sigma, dyadic(k));
    // 2^-(k-1) is the witness once its stability probe at 2^-k also holds.
    if (holds && previous_holds) {
      if (halvings) *halvings = k - 1;
      return dyadic(k - 1);
    }
    previous_holds = holds;
  }
  fail(ErrorKind::WitnessSearchExhausted,
       "no witness among 2^-1 .. 2^-" + std::to_string(options.max_halvings) + " for " + to_string(sigma));
}

}  // namespace

Rational find_witness(const BiPoly& q, std::span<const UniPoly> roots, const Permutation& sigma,
                      WitnessOptions options) {
  auto cpolys = critical_polynomials(q, roots);
  return search_witness(roots, cpolys, sigma, options, nullptr);
}

std::vector<SignedAreaTerm> difference_decomposition(std::size_t i, std::size_t j, std::size_t m) {
  if (i < 1 || j <= i || j > m + 1)
    fail(ErrorKind::IndexOutOfRange, "need 1 <= i < j <= " + std::to_string(m + 1));
  std::vector<SignedAreaTerm> out;
  for (std::size_t k = i; k < j; ++k) out.push_back({k, (m + 1 - k) % 2 == 0 ? 1 : -1});
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> symbolic_order_mismatches(std::span<const UniPoly> critical_polys,
                                                                           const Permutation& sigma) {
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t i = 1; i <= critical_polys.size(); ++i)
    for (std::size_t j = i + 1; j <= critical_polys.size(); ++j) {
      const bool expected = sigma(i) < sigma(j);
      bool got = false;
      if (critical_polys[i - 1] == critical_polys[j - 1]) {
        bad.emplace_back(i, j);
        continue;
      }
      got = precedes_right(critical_polys[i - 1], critical_polys[j - 1]);
      if (got != expected) bad.emplace_back(i, j);
    }
  return bad;
}

RealizationResult realize_snake(const Permutation& sigma, WitnessOptions options) {
  if (sigma.size() == 0) fail(ErrorKind::InvalidPermutation, "empty permutation");
  if (!is_snake(sigma)) fail(ErrorKind::NotASnake, to_string(sigma) + " is not alternating");
  if (sigma.size() >= 2 && !ends_descending(sigma))
    fail(ErrorKind::WrongOrientation,
         to_string(sigma) + " ends with an ascent; a monic construction needs sigma(m) > sigma(m+1)");

  RealizationResult r;
  r.sigma = sigma;
  r.tree = build_separating_tree(sigma);  // throws NotSeparable
  r.roots = realize_tree(contact_shape_of(r.tree));
  r.p = product_of_linear_factors(r.roots);
  const auto degree = static_cast<unsigned long>(sigma.size() + 1);  // m + 2
  r.q = antiderivative_y(r.p) * Rational(degree);
  r.critical_polys = critical_polynomials(r.q, r.roots);

  auto bad = symbolic_order_mismatches(r.critical_polys, sigma);
  if (!bad.empty())
    fail(ErrorKind::ContractViolation, "critical value polynomials c_" + std::to_string(bad.front().first) +
                                           ", c_" + std::to_string(bad.front().second) + " are out of order for " +
                                           to_string(sigma));

  r.witness_x = search_witness(r.roots, r.critical_polys, sigma, options, &r.witness_halvings);
  r.critical_values = critical_values_at(r.q, r.roots, r.witness_x);
  r.verified_snake = snake_of_sequence(AltSequence(r.critical_values));
  if (r.verified_snake != sigma)
    fail(ErrorKind::ContractViolation, "snake at the witness is " + to_string(r.verified_snake));
  return r;
}

}  // namespace snakeforge
