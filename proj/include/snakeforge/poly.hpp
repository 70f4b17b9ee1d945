#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snakeforge/rational.hpp"

namespace snakeforge {

/// Dense univariate polynomial over Q. Coefficient k multiplies t^k.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial is
/// uniquely the empty vector. The class is variable-agnostic; the variable name
/// only matters when printing or parsing.
class UniPoly {
 public:
  static constexpr long kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(const Rational& c);  // NOLINT: constants convert implicitly
  UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT

  static UniPoly monomial(const Rational& c, std::size_t k);
  static UniPoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero for indices past the degree.
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& t) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Valuation valuation_x(const UniPoly& p);

// Lowest-order nonzero coefficient. Precondition: p nonzero.
Rational lowest_coefficient(const UniPoly& p);

// p < q for all sufficiently small x > 0: the lowest nonzero coefficient of
// q - p is positive. Throws EqualPolynomials when p == q.
bool precedes_right(const UniPoly& p, const UniPoly& q);

UniPoly derivative(const UniPoly& p);
// Antiderivative with zero constant term.
UniPoly antiderivative(const UniPoly& p);
// p(q(t))
UniPoly compose(const UniPoly& p, const UniPoly& q);
UniPoly pow(const UniPoly& p, unsigned k);

// Euclidean division over Q; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& p);
bool is_squarefree(const UniPoly& p);
// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);
// Resultant over Q of two nonzero polynomials.
Rational resultant(const UniPoly& a, const UniPoly& b);
// Unique polynomial of degree < points.size() through the given points.
UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points);

std::string to_string(const UniPoly& p, char var = 'x');
// Accepts sums of terms in `var`, e.g. "x^2 + 1/2*x^5" or "-3/4 + 2x".
UniPoly parse_unipoly(std::string_view text, char var = 'x');

/// Polynomial in y with coefficients in Q[x]. Coefficient k multiplies y^k.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> y_coeffs);
  BiPoly(const UniPoly& c);  // NOLINT: constant in y

  static BiPoly y() { return BiPoly(std::vector<UniPoly>{UniPoly(), UniPoly(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  long degree_y() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<UniPoly>& y_coeffs() const { return coeffs_; }
  UniPoly coeff(std::size_t k) const;

  Rational operator()(const Rational& x, const Rational& y) const;
  // Specialize x := x0, giving a polynomial in y.
  UniPoly at_x(const Rational& x0) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void trim();
  std::vector<UniPoly> coeffs_;
};

// prod (y - a_i(x))
BiPoly product_of_linear_factors(std::span<const UniPoly> roots);
BiPoly derivative_y(const BiPoly& p);
// R with dR/dy = P and R(x, 0) = 0.
BiPoly antiderivative_y(const BiPoly& p);
// P(x, a(x))
UniPoly compose_y(const BiPoly& p, const UniPoly& a);
// Integral of P dy from lo(x) to hi(x).
UniPoly definite_integral_y(const BiPoly& p, const UniPoly& lo, const UniPoly& hi);

// Descending in y; non-constant x-coefficients are parenthesized.
std::string to_string(const BiPoly& p);
BiPoly parse_bipoly(std::string_view text);

}  // namespace snakeforge
