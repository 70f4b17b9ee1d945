#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "snakeforge/permutation.hpp"

namespace snakeforge {

// Per-n tallies over all n! permutations.
struct CensusRow {
  std::size_t n = 0;
  std::uint64_t permutations = 0;
  std::uint64_t snakes = 0;
  std::uint64_t separable_by_patterns = 0;  // avoids 3142 and 2413
  std::uint64_t separable_by_tree = 0;      // a binary separating tree exists
  std::uint64_t descending_separable_snakes = 0;
  // Both predicates agree on every permutation.
  std::uint64_t separability_disagreements = 0;
  // Filled only when verification was requested.
  bool verified = false;
  std::uint64_t realizations_verified = 0;
  std::uint64_t realization_failures = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusOptions {
  bool verify = false;  // run the full realization on every descending separable snake
  int jobs = 0;         // OpenMP threads for the parallel kernel; 0 = runtime default
};

inline constexpr std::size_t kMaxCensusN = 10;

// Reference kernel: one lexicographic sweep with std::next_permutation.
CensusRow census_serial(std::size_t n, const CensusOptions& options = {});
// OpenMP kernel over fixed-size lexicographic rank blocks. Must agree with
// census_serial on every field.
CensusRow census_parallel(std::size_t n, const CensusOptions& options = {});

// Descending separable snakes of size n in lexicographic order: the inputs
// the realization pipeline accepts.
std::vector<Permutation> realizable_snakes(std::size_t n);

// k-th permutation of {1..n} in lexicographic order (0-based).
std::vector<int> unrank_permutation(std::size_t n, std::uint64_t k);
std::uint64_t factorial(std::size_t n);

}  // namespace snakeforge
