#include "doctest.h"
#include "oracles.hpp"
#include "snakeforge/error.hpp"
#include "snakeforge/separating_tree.hpp"

using namespace snakeforge;

namespace {
Permutation perm(const char* s) { return parse_permutation(s); }
}  // namespace

TEST_CASE("canonical construction") {
  SignedTree t = build_separating_tree(perm("4 5 1 3 2"));
  CHECK(t.same_shape(oracle::tree_from_text("((. + .) - (. + (. - .)))")));
  CHECK(is_valid_separating_tree(t, perm("4 5 1 3 2")));
  CHECK(t.leaf_count() == 5);
  CHECK(t.internal_count() == 4);

  SignedTree one = build_separating_tree(perm("1"));
  CHECK(one.node(one.root()).leaf);
  CHECK(one.node(one.root()).label == 1);

  try {
    build_separating_tree(perm("3 1 4 2"));
    FAIL("expected NotSeparable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSeparable);
  }
  CHECK_FALSE(try_build_separating_tree(perm("2 4 1 3")).has_value());
}

TEST_CASE("permutation_of_tree") {
  CHECK(permutation_of_tree(oracle::tree_from_text("((. + .) - (. + (. - .)))")) == perm("4 5 1 3 2"));
  CHECK(permutation_of_tree(oracle::tree_from_text("((. + .) - ((. + .) - (. + (. - .))))")) ==
        perm("6 7 4 5 1 3 2"));
  CHECK(permutation_of_tree(oracle::tree_from_text(".")) == perm("1"));
}

TEST_CASE("meet_sign") {
  SignedTree t = build_separating_tree(perm("6 7 4 5 1 3 2"));
  CHECK(meet_sign(t, 1, 4) == Sign::Minus);
  SignedTree u = build_separating_tree(perm("4 5 1 3 2"));
  CHECK(meet_sign(u, 1, 2) == Sign::Plus);
  CHECK_THROWS_AS(meet_sign(u, 2, 2), Error);
  CHECK_THROWS_AS(meet_sign(u, 0, 2), Error);
  CHECK_THROWS_AS(meet_sign(u, 1, 6), Error);
}

TEST_CASE("signs_alternate and rightmost_sign") {
  CHECK(signs_alternate(build_separating_tree(perm("4 5 1 3 2"))));
  CHECK_FALSE(signs_alternate(oracle::tree_from_text("((. + .) + .)")));
  CHECK(signs_alternate(oracle::tree_from_text("(. + .)")));
  // A snake whose every separating tree has a same-signed parent and child.
  CHECK(signs_alternate(build_separating_tree(perm("1 3 2 4"))));

  CHECK(rightmost_sign(build_separating_tree(perm("4 5 1 3 2"))) == Sign::Minus);
  CHECK(rightmost_sign(oracle::tree_from_text("(. + .)")) == Sign::Plus);
  CHECK(rightmost_sign(build_separating_tree(perm("2 1"))) == Sign::Minus);
  try {
    rightmost_sign(oracle::tree_from_text("."));
    FAIL("expected LeafOnly");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LeafOnly);
  }
}

TEST_CASE("malformed trees are rejected") {
  SignedTree t;
  auto a = t.add_leaf(1);
  t.set_root(t.add_node(Sign::Plus, a, a));
  CHECK_THROWS_AS(t.check_structure(), Error);
  SignedTree u;
  u.add_leaf(1);
  u.set_root(u.add_node(Sign::Plus, 0, 7));
  CHECK_THROWS_AS(permutation_of_tree(u), Error);
  // Wrong labels: the frontier must spell the permutation.
  CHECK_FALSE(is_valid_separating_tree(build_separating_tree(perm("2 1")), perm("1 2")));
}

TEST_CASE("property: exhaustive tree invariants for n <= 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t violations = 0, count = 0;
    for (const auto& v : oracle::separable_by_brute_force(n)) {
      ++count;
      Permutation p(v);
      auto t = try_build_separating_tree(p);
      if (!t) {
        ++violations;
        continue;
      }
      violations += !is_valid_separating_tree(*t, p);
      violations += permutation_of_tree(*t) != p;
      violations += signs_alternate(*t) != oracle::alternates(v);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) violations += (meet_sign(*t, i, j) == Sign::Plus) != (v[i - 1] < v[j - 1]);
      if (n >= 2 && oracle::alternates(v) && v[n - 2] > v[n - 1]) violations += rightmost_sign(*t) != Sign::Minus;
    }
    CHECK(violations == 0);
    CHECK(count > 0);
  }
}
