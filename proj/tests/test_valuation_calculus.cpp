#include "doctest.h"
#include "oracles.hpp"
#include "snakeforge/error.hpp"
#include "snakeforge/valuation_calculus.hpp"

using namespace snakeforge;

namespace {
UniPoly P(const char* s) { return parse_unipoly(s); }

std::vector<UniPoly> example_caterpillar() {
  return {UniPoly(), P("x^4"), P("x^3+x^4"), P("x^2+x^3+x^4"), P("x+x^2+x^3+x^4")};
}
std::vector<UniPoly> example_seven() {
  return {UniPoly(), P("x^6"), P("x+x^6"), P("x+x^2+x^6"), P("x+x^2+x^3+x^6"), P("x+x^2+x^3+x^4+x^6"),
          P("x+x^2+x^3+x^4+x^5+x^6")};
}

std::vector<std::pair<std::size_t, std::size_t>> cmap(const AreaProfile& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& t : p.terms) out.emplace_back(t.vertex_valuation, t.leaf_count);
  return out;
}

std::vector<std::vector<int>> all_signs(std::size_t len) {
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
    std::vector<int> s(len);
    for (std::size_t k = 0; k < len; ++k) s[k] = (mask >> k) & 1 ? -1 : 1;
    out.push_back(s);
  }
  return out;
}
}  // namespace

TEST_CASE("area_valuation fixtures") {
  auto cat = example_caterpillar();
  AreaProfile p3 = area_valuation(contact_tree_of(cat), 3);
  CHECK(p3.valuation == 11);
  CHECK(p3.gap_valuation == 2);
  CHECK(cmap(p3) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 4}});
  CHECK(area_valuation_oracle(cat, 3) == 11);

  auto seven = example_seven();
  AreaProfile p4 = area_valuation(contact_tree_of(seven), 4);
  CHECK(p4.valuation == 19);
  CHECK(cmap(p4) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 1}, {3, 4}});
  CHECK(area_valuation_oracle(seven, 4) == 19);

  for (std::size_t e = 1; e <= 5; ++e) {
    std::vector<UniPoly> two{UniPoly(), UniPoly::monomial(1, e)};
    CHECK(area_valuation(contact_tree_of(two), 1).valuation == 3 * e);
    CHECK(area_valuation_oracle(two, 1) == 3 * e);
  }
  std::vector<UniPoly> zx{UniPoly(), P("x")};
  CHECK(signed_area_integral(zx, 1) == P("-1/6*x^3"));
  CHECK(area_polynomial(zx, 1) == P("1/6*x^3"));
}

TEST_CASE("area_valuation rejects non-binary trees and bad indices") {
  std::vector<UniPoly> fan{UniPoly(), P("x"), P("x+x^2"), P("3/2*x+x^2"), P("3/2*x+x^2+x^3")};
  try {
    area_valuation(contact_tree_of(fan), 1);
    FAIL("expected NonBinaryTree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonBinaryTree);
  }
  ContactTree t = contact_tree_of(example_caterpillar());
  CHECK_THROWS_AS(area_valuation(t, 0), Error);
  CHECK_THROWS_AS(area_valuation(t, 5), Error);
}

TEST_CASE("area_side") {
  CHECK(area_side(4, 4) == Side::Below);
  CHECK(area_side(3, 4) == Side::Above);
  CHECK(area_side(1, 1) == Side::Below);
  CHECK_THROWS_AS(area_side(0, 4), Error);
  CHECK_THROWS_AS(area_side(5, 4), Error);
}

TEST_CASE("compare_areas") {
  auto cat = example_caterpillar();
  ContactTree t = contact_tree_of(cat);
  CHECK(compare_areas(t, 4, 1) == AreaOrder::Greater);
  CHECK(compare_areas(t, 1, 4) == AreaOrder::Less);
  CHECK(area_valuation_oracle(cat, 4) < area_valuation_oracle(cat, 1));
  CHECK_THROWS_AS(compare_areas(t, 2, 2), Error);

  ContactTree balanced;
  auto top = balanced.add_internal(balanced.root(), 1);
  auto l = balanced.add_internal(top, 2);
  auto r = balanced.add_internal(top, 2);
  balanced.add_leaf(l);
  balanced.add_leaf(l);
  balanced.add_leaf(r);
  balanced.add_leaf(r);
  balanced.number_leaves();
  CHECK(compare_areas(balanced, 1, 3) == AreaOrder::Incomparable);
  CHECK(compare_areas(balanced, 2, 3) == AreaOrder::Greater);
}

TEST_CASE("sum_valuation") {
  auto cat = example_caterpillar();
  ContactTree t = contact_tree_of(cat);
  CHECK(dominant_area_index(t, 1, 5) == 4);
  for (const auto& s : all_signs(4)) {
    CHECK(sum_valuation(t, 1, 5, s) == 6);
    CHECK(sum_valuation_oracle(cat, 1, 5, s) == Valuation(6));
  }
  std::vector<int> one{1};
  CHECK(sum_valuation(t, 2, 3, one) == area_valuation(t, 2).valuation);

  auto seven = example_seven();
  ContactTree s7 = contact_tree_of(seven);
  std::vector<int> alt{1, -1, 1, -1, 1};
  CHECK(dominant_area_index(s7, 2, 7) == 2);
  CHECK(sum_valuation(s7, 2, 7, alt) == 8);
  CHECK(sum_valuation_oracle(seven, 2, 7, alt) == Valuation(8));
  std::vector<int> bad{1, 2, 1, 1, 1};
  CHECK_THROWS_AS(sum_valuation(s7, 2, 7, bad), Error);
  CHECK_THROWS_AS(sum_valuation(s7, 2, 7, one), Error);
}

TEST_CASE("property: formula agrees with exact integration on every small shape") {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& shape : oracle::all_binary_shapes(n)) {
      auto roots = realize_tree(shape);
      ContactTree t = contact_tree_of(roots);
      for (std::size_t i = 1; i < n; ++i) {
        AreaProfile p = area_valuation(t, i);
        CHECK(p.valuation == area_valuation_oracle(roots, i));
        // q-coefficient form reproduces the same number
        auto gaps = gap_valuations(roots);
        auto q = q_coefficients(t, p);
        std::size_t total = gaps[i - 1];
        for (std::size_t j = 0; j < q.size(); ++j) total += q[j] * gaps[j];
        CHECK(total == p.valuation);
        // leaf counts partition all leaves
        std::size_t leaves = 0;
        for (const auto& term : p.terms) leaves += term.leaf_count;
        CHECK(leaves == n);
        // side parity matches the sign of the exact integral
        const int sign = sgn(lowest_coefficient(signed_area_integral(roots, i)));
        CHECK((sign > 0) == (area_side(i, n - 1) == Side::Above));
        CHECK(p.side == area_side(i, n - 1));
      }
    }
}

TEST_CASE("property: comparability and sign-pattern invariance on random shapes") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<std::size_t> size(2, 7);
  for (int trial = 0; trial < 40; ++trial) {
    auto shape = oracle::random_binary_shape(size(rng), rng);
    auto roots = realize_tree(shape);
    ContactTree t = contact_tree_of(roots);
    const std::size_t m = roots.size() - 1;
    std::vector<std::size_t> nu(m + 1);
    for (std::size_t i = 1; i <= m; ++i) nu[i] = area_valuation_oracle(roots, i);
    for (std::size_t k = 1; k <= m; ++k)
      for (std::size_t l = 1; l <= m; ++l) {
        if (k == l) continue;
        auto order = compare_areas(t, k, l);
        if (order == AreaOrder::Greater) CHECK(nu[l] > nu[k]);
        if (order == AreaOrder::Less) CHECK(nu[k] > nu[l]);
      }
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = i + 1; j <= std::min(m + 1, i + 5); ++j) {
        const std::size_t expected = nu[dominant_area_index(t, i, j)];
        for (const auto& s : all_signs(j - i)) {
          CHECK(sum_valuation(t, i, j, s) == expected);
          CHECK(sum_valuation_oracle(roots, i, j, s) == Valuation(expected));
        }
      }
  }
}
