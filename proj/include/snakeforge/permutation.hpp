#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snakeforge/rational.hpp"

namespace snakeforge {

/// Bijection of {1..n} in one-line notation, 1-indexed at the interface.
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless images is a permutation of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  // sigma(i) for 1 <= i <= size().
  int operator()(std::size_t i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Whitespace- or comma-separated one-line notation.
Permutation parse_permutation(std::string_view text);
std::string to_string(const Permutation& p);

// Pairwise distinct rationals whose consecutive differences alternate in sign.
class AltSequence {
 public:
  // Throws DuplicateValues or NotAlternating.
  explicit AltSequence(std::vector<Rational> values);
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Rational> values_;
};

// Consecutive entries strictly alternate rise/fall, in either starting
// direction. Sequences of length <= 2 with distinct entries qualify.
bool is_alternating(std::span<const int> values);
bool is_snake(const Permutation& p);

// result(i) = rank of s(i) among the values of s.
Permutation snake_of_sequence(const AltSequence& s);

Permutation direct_sum(const Permutation& p, const Permutation& q);
Permutation skew_sum(const Permutation& p, const Permutation& q);

bool contains_pattern(const Permutation& p, const Permutation& pattern);
// Avoids both 3142 and 2413.
bool is_separable(const Permutation& p);

// sigma(m) > sigma(m + 1) where m + 1 = size(); false for size() < 2.
bool ends_descending(const Permutation& p);

}  // namespace snakeforge
