#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "snakeforge/error.hpp"
#include "snakeforge/permutation.hpp"

using namespace snakeforge;

namespace {
Permutation perm(const char* s) { return parse_permutation(s); }

std::vector<Rational> ints(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int k : v) out.emplace_back(k);
  return out;
}
}  // namespace

TEST_CASE("Permutation validation and parsing") {
  CHECK(perm("4 5 1 3 2").images() == std::vector<int>{4, 5, 1, 3, 2});
  CHECK(perm("4,5,1,3,2") == perm("4 5 1 3 2"));
  CHECK(to_string(perm("3 1 2")) == "3 1 2");
  CHECK(perm("2 1")(1) == 2);
  CHECK_THROWS_AS(Permutation({1, 1}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(perm("1 x"), Error);
  try {
    perm("1 3");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPermutation);
  }
}

TEST_CASE("is_snake") {
  CHECK(is_snake(perm("3 2 4 1 5")));
  CHECK_FALSE(is_snake(perm("1 2 3")));
  CHECK(is_snake(perm("1")));
  CHECK(is_snake(perm("1 2")));
  CHECK(is_snake(perm("2 1")));
}

TEST_CASE("AltSequence and snake_of_sequence") {
  CHECK(snake_of_sequence(AltSequence(ints({3, 1, 4, -1, 6}))) == perm("3 2 4 1 5"));
  std::vector<Rational> intro{make_rational(207, 10), make_rational(184, 10), make_rational(288, 10),
                              make_rational(-441, 10)};
  CHECK(snake_of_sequence(AltSequence(intro)) == perm("3 2 4 1"));
  CHECK(snake_of_sequence(AltSequence(ints({7}))) == perm("1"));
  try {
    AltSequence(ints({1, 2, 3}));
    FAIL("expected NotAlternating");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAlternating);
  }
  try {
    AltSequence(ints({1, 2, 1}));
    FAIL("expected DuplicateValues");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateValues);
  }
}

TEST_CASE("direct_sum and skew_sum") {
  CHECK(direct_sum(perm("4 6 5 3 1 2"), perm("1 3 2")) == perm("4 6 5 3 1 2 7 9 8"));
  CHECK(skew_sum(perm("4 6 5 3 1 2"), perm("1 3 2")) == perm("7 9 8 6 4 5 1 3 2"));
  CHECK(direct_sum(perm("1"), perm("1")) == perm("1 2"));
  CHECK(skew_sum(perm("1"), perm("1")) == perm("2 1"));
  CHECK(direct_sum(perm("2 1 3"), Permutation::identity(2)) == perm("2 1 3 4 5"));
  Permutation dec = Permutation::identity(1);
  for (int k = 0; k < 4; ++k) dec = skew_sum(dec, Permutation::identity(1));
  CHECK(dec == perm("5 4 3 2 1"));
}

TEST_CASE("pattern containment") {
  const Permutation p3142 = perm("3 1 4 2");
  CHECK(contains_pattern(p3142, p3142));
  CHECK_FALSE(contains_pattern(perm("6 7 4 5 1 3 2"), p3142));
  CHECK_FALSE(oracle::contains_by_subsets({6, 7, 4, 5, 1, 3, 2}, {3, 1, 4, 2}));
  CHECK_FALSE(contains_pattern(perm("2 4 1 3"), p3142));
  CHECK(contains_pattern(perm("5 3 1 6 2 4"), p3142));
}

TEST_CASE("is_separable") {
  CHECK(is_separable(perm("6 7 4 5 1 3 2")));
  CHECK_FALSE(is_separable(perm("3 1 4 2")));
  CHECK_FALSE(is_separable(perm("2 4 1 3")));
  for (std::size_t n = 1; n <= 8; ++n) CHECK(is_separable(Permutation::identity(n)));
}

TEST_CASE("ends_descending") {
  CHECK(ends_descending(perm("4 5 1 3 2")));
  CHECK_FALSE(ends_descending(perm("1 2")));
  CHECK_FALSE(ends_descending(perm("1")));
}

TEST_CASE("property: pattern search agrees with the subset oracle for n <= 7") {
  const std::vector<std::vector<int>> patterns{{3, 1, 4, 2}, {2, 4, 1, 3}, {1, 3, 2}, {2, 1, 3}};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::size_t mismatches = 0;
    do {
      Permutation p(v);
      for (const auto& pat : patterns)
        mismatches += contains_pattern(p, Permutation(pat)) != oracle::contains_by_subsets(v, pat);
    } while (std::next_permutation(v.begin(), v.end()));
    CHECK(mismatches == 0);
  }
}

TEST_CASE("property: snake counts match the boustrophedon triangle") {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t snakes = 0;
    do snakes += is_snake(Permutation(v));
    while (std::next_permutation(v.begin(), v.end()));
    CHECK(snakes == oracle::alternating_count(n));
  }
}

TEST_CASE("property: sums of separable permutations stay separable") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(1, 4);
    std::vector<int> a(static_cast<std::size_t>(size(rng))), b(static_cast<std::size_t>(size(rng)));
    std::iota(a.begin(), a.end(), 1);
    std::iota(b.begin(), b.end(), 1);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation pa(a), pb(b);
    if (!is_separable(pa) || !is_separable(pb)) continue;
    CHECK(is_separable(direct_sum(pa, pb)));
    CHECK(is_separable(skew_sum(pa, pb)));
  }
}
