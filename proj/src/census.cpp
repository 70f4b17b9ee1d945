#include "snakeforge/census.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "snakeforge/error.hpp"
#include "snakeforge/realization.hpp"
#include "snakeforge/separating_tree.hpp"

namespace snakeforge {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<int> unrank_permutation(std::size_t n, std::uint64_t k) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t i = n; i > 0; --i) {
    const std::uint64_t f = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(k / f);
    k %= f;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return out;
}

namespace {

void check_n(std::size_t n) {
  if (n < 1 || n > kMaxCensusN)
    fail(ErrorKind::UsageError, "census size must be in 1.." + std::to_string(kMaxCensusN));
}

struct Tally {
  std::uint64_t permutations = 0, snakes = 0, by_patterns = 0, by_tree = 0, descending = 0, disagreements = 0;
};

inline void tally_one(const std::vector<int>& v, Tally& t) {
  ++t.permutations;
  const bool snake = is_alternating(v);
  Permutation p(v);
  const bool patterns = is_separable(p);
  const bool tree = try_build_separating_tree(p).has_value();
  t.snakes += snake;
  t.by_patterns += patterns;
  t.by_tree += tree;
  t.disagreements += patterns != tree;
  t.descending += snake && tree && (v.size() == 1 || ends_descending(p));
}

bool realizes(const Permutation& sigma) {
  try {
    return realize_snake(sigma).verified_snake == sigma;
  } catch (const Error&) {
    return false;
  }
}

CensusRow to_row(std::size_t n, const Tally& t) {
  CensusRow row;
  row.n = n;
  row.permutations = t.permutations;
  row.snakes = t.snakes;
  row.separable_by_patterns = t.by_patterns;
  row.separable_by_tree = t.by_tree;
  row.descending_separable_snakes = t.descending;
  row.separability_disagreements = t.disagreements;
  return row;
}

}  // namespace

std::vector<Permutation> realizable_snakes(std::size_t n) {
  check_n(n);
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    if (!is_alternating(v)) continue;
    Permutation p(v);
    if (n >= 2 && !ends_descending(p)) continue;
    if (try_build_separating_tree(p)) out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

CensusRow census_serial(std::size_t n, const CensusOptions& options) {
  check_n(n);
  Tally t;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    tally_one(v, t);
  } while (std::next_permutation(v.begin(), v.end()));
  CensusRow row = to_row(n, t);
  if (options.verify) {
    row.verified = true;
    for (const auto& sigma : realizable_snakes(n)) {
      if (realizes(sigma))
        ++row.realizations_verified;
      else
        ++row.realization_failures;
    }
  }
  return row;
}

CensusRow census_parallel(std::size_t n, const CensusOptions& options) {
  check_n(n);
#ifdef _OPENMP
  if (options.jobs > 0) omp_set_num_threads(options.jobs);
#endif
  const std::uint64_t total = factorial(n);
  constexpr std::uint64_t kBlock = 720;
  const auto blocks = static_cast<long long>((total + kBlock - 1) / kBlock);

  std::uint64_t perms = 0, snakes = 0, by_patterns = 0, by_tree = 0, descending = 0, disagreements = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : perms, snakes, by_patterns, by_tree, descending, disagreements)
  for (long long b = 0; b < blocks; ++b) {
    const std::uint64_t start = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t stop = std::min(total, start + kBlock);
    std::vector<int> v = unrank_permutation(n, start);
    Tally t;
    for (std::uint64_t k = start; k < stop; ++k) {
      tally_one(v, t);
      std::next_permutation(v.begin(), v.end());
    }
    perms += t.permutations;
    snakes += t.snakes;
    by_patterns += t.by_patterns;
    by_tree += t.by_tree;
    descending += t.descending;
    disagreements += t.disagreements;
  }
  CensusRow row = to_row(n, Tally{perms, snakes, by_patterns, by_tree, descending, disagreements});

  if (options.verify) {
    row.verified = true;
    const auto targets = realizable_snakes(n);
    const auto count = static_cast<long long>(targets.size());
    std::uint64_t ok = 0, bad = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : ok, bad)
    for (long long k = 0; k < count; ++k) {
      if (realizes(targets[static_cast<std::size_t>(k)]))
        ++ok;
      else
        ++bad;
    }
    row.realizations_verified = ok;
    row.realization_failures = bad;
  }
  return row;
}

}  // namespace snakeforge
