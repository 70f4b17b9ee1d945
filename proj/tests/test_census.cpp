#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "snakeforge/census.hpp"
#include "snakeforge/error.hpp"

using namespace snakeforge;

TEST_CASE("census rows") {
  CensusRow four = census_serial(4);
  CHECK(four.permutations == 24);
  CHECK(four.snakes == 10);
  CHECK(four.separable_by_patterns == 22);
  CHECK(four.separable_by_tree == 22);
  CHECK(four.separability_disagreements == 0);

  CensusRow one = census_serial(1);
  CHECK(one.permutations == 1);
  CHECK(one.snakes == 1);
  CHECK(one.separable_by_tree == 1);
  CHECK(one.descending_separable_snakes == 1);

  CHECK_THROWS_AS(census_serial(0), Error);
  CHECK_THROWS_AS(census_parallel(kMaxCensusN + 1), Error);
}

TEST_CASE("census counts match independent oracles") {
  const std::uint64_t schroeder[] = {1, 2, 6, 22, 90, 394, 1806, 8558};
  for (std::size_t n = 1; n <= 8; ++n) {
    CensusRow row = census_parallel(n);
    CHECK(row.snakes == oracle::alternating_count(n));
    CHECK(row.separable_by_tree == schroeder[n - 1]);
    CHECK(row.separable_by_patterns == schroeder[n - 1]);
    if (n <= 7) CHECK(row.separable_by_tree == oracle::separable_by_brute_force(n).size());
    CHECK(row.descending_separable_snakes == realizable_snakes(n).size());
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (std::size_t n = 1; n <= 8; ++n) {
    CensusRow serial = census_serial(n);
    for (int jobs : {1, 2, 4}) CHECK(census_parallel(n, {false, jobs}) == serial);
  }
  CensusRow s = census_serial(5, {true, 0});
  CensusRow p = census_parallel(5, {true, 3});
  CHECK(s == p);
  CHECK(s.verified);
  CHECK(s.realization_failures == 0);
  CHECK(s.realizations_verified == s.descending_separable_snakes);
}

TEST_CASE("unrank_permutation walks lexicographic order") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t k = 0;
    do CHECK(unrank_permutation(n, k++) == v);
    while (std::next_permutation(v.begin(), v.end()));
    CHECK(k == factorial(n));
  }
}

TEST_CASE("property: complementation pairs the two orientations") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CensusRow row = census_serial(n);
    std::uint64_t separable_snakes = 0;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do separable_snakes += oracle::alternates(v) && try_build_separating_tree(Permutation(v)).has_value();
    while (std::next_permutation(v.begin(), v.end()));
    CHECK(2 * row.descending_separable_snakes == separable_snakes);
  }
}
