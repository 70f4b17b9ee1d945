#include "snakeforge/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "snakeforge/error.hpp"

namespace snakeforge {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      fail(ErrorKind::InvalidPermutation, "not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> v;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(ErrorKind::ParseError, "unexpected character in permutation '" + std::string(text) + "'");
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000000) fail(ErrorKind::ParseError, "permutation entry too large");
      ++i;
    }
    v.push_back(static_cast<int>(value));
  }
  if (v.empty()) fail(ErrorKind::ParseError, "empty permutation");
  return Permutation(std::move(v));
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (int v : p.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

AltSequence::AltSequence(std::vector<Rational> values) : values_(std::move(values)) {
  std::vector<Rational> sorted = values_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::DuplicateValues, "sequence values must be pairwise distinct");
  for (std::size_t i = 2; i < values_.size(); ++i) {
    int prev = sgn(values_[i - 1] - values_[i - 2]);
    int cur = sgn(values_[i] - values_[i - 1]);
    if (prev == cur) fail(ErrorKind::NotAlternating, "differences do not alternate at position " + std::to_string(i));
  }
}

bool is_alternating(std::span<const int> values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] == values[i - 1]) return false;
  for (std::size_t i = 2; i < values.size(); ++i) {
    bool rise_prev = values[i - 1] > values[i - 2];
    bool rise_cur = values[i] > values[i - 1];
    if (rise_prev == rise_cur) return false;
  }
  return true;
}

bool is_snake(const Permutation& p) { return is_alternating(p.images()); }

Permutation snake_of_sequence(const AltSequence& s) {
  const auto& v = s.values();
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<int> rank(v.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r + 1);
  return Permutation(std::move(rank));
}

Permutation direct_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> out = p.images();
  const int shift = static_cast<int>(p.size());
  for (int v : q.images()) out.push_back(v + shift);
  return Permutation(std::move(out));
}

Permutation skew_sum(const Permutation& p, const Permutation& q) {
  std::vector<int> out;
  out.reserve(p.size() + q.size());
  const int shift = static_cast<int>(q.size());
  for (int v : p.images()) out.push_back(v + shift);
  for (int v : q.images()) out.push_back(v);
  return Permutation(std::move(out));
}

namespace {

// Exhaustive search over index subsets of size |pattern|, pruned by checking
// the relative order of each new entry against those already chosen.
bool extend_match(const std::vector<int>& text, const std::vector<int>& pat, std::vector<int>& chosen,
                  std::size_t start) {
  const std::size_t depth = chosen.size();
  if (depth == pat.size()) return true;
  for (std::size_t i = start; i + (pat.size() - depth) <= text.size(); ++i) {
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d)
      ok = (chosen[d] < text[i]) == (pat[d] < pat[depth]);
    if (!ok) continue;
    chosen.push_back(text[i]);
    if (extend_match(text, pat, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(pattern.size());
  return extend_match(p.images(), pattern.images(), chosen, 0);
}

bool is_separable(const Permutation& p) {
  static const Permutation k3142({3, 1, 4, 2});
  static const Permutation k2413({2, 4, 1, 3});
  return !contains_pattern(p, k3142) && !contains_pattern(p, k2413);
}

bool ends_descending(const Permutation& p) {
  const std::size_t n = p.size();
  return n >= 2 && p(n - 1) > p(n);
}

}  // namespace snakeforge
