#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace snakeforge {

// Arbitrary-precision fraction. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation; values built
// from a raw numerator/denominator pair must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// 1/2^k
Rational dyadic(unsigned k);

// "p/q" or "p"; the denominator is omitted when it is 1.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

// Decimal rendering with `digits` significant digits. Presentation only.
std::string to_decimal(const Rational& q, int digits);

inline int sign(const Rational& q) { return sgn(q); }

// x-adic valuation of a polynomial: the smallest exponent with a nonzero
// coefficient, or infinity for the zero polynomial.
class Valuation {
 public:
  constexpr explicit Valuation(std::size_t v) : value_(v), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  // Precondition: !is_infinite().
  std::size_t value() const;

  friend constexpr Valuation operator+(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  std::size_t value_;
  bool infinite_;
};

std::string to_string(Valuation v);

}  // namespace snakeforge
