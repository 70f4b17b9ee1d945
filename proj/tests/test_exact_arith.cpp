#include "doctest.h"
#include "oracles.hpp"
#include "snakeforge/error.hpp"
#include "snakeforge/poly.hpp"

using namespace snakeforge;

namespace {
UniPoly P(const char* s) { return parse_unipoly(s); }
BiPoly B(const char* s) { return parse_bipoly(s); }
}  // namespace

TEST_CASE("rationals stay canonical") {
  Rational a = make_rational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK(to_string(make_rational(-5, 2)) == "-5/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(to_decimal(make_rational(1, 3), 5) == "0.33333");
}

TEST_CASE("valuation_x") {
  CHECK(valuation_x(P("x^3 + x^4")) == Valuation(3));
  CHECK(valuation_x(UniPoly()).is_infinite());
  CHECK(valuation_x(P("5 - 2*x")) == Valuation(0));
  CHECK(Valuation(2) < Valuation::infinity());
  CHECK((Valuation(2) + Valuation::infinity()).is_infinite());
}

TEST_CASE("precedes_right") {
  CHECK(precedes_right(P("x^2"), P("x")));
  CHECK(precedes_right(UniPoly(), P("x^4")));
  CHECK_FALSE(precedes_right(P("x"), P("x^2")));
  // Agrees with evaluation at a small point for these.
  CHECK(P("x")(make_rational(1, 10)) > P("x^2")(make_rational(1, 10)));
  try {
    precedes_right(P("x"), P("x"));
    FAIL("expected EqualPolynomials");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EqualPolynomials);
  }
}

TEST_CASE("product_of_linear_factors") {
  std::vector<UniPoly> two{UniPoly(), P("x")};
  CHECK(product_of_linear_factors(two) == B("y^2 - x*y"));
  CHECK(product_of_linear_factors(std::vector<UniPoly>{}) == BiPoly(UniPoly(1)));

  std::vector<UniPoly> ex{UniPoly(), P("x^4"), P("x^3+x^4"), P("x^2+x^3+x^4"), P("x+x^2+x^3+x^4")};
  BiPoly p = product_of_linear_factors(ex);
  CHECK(p.degree_y() == 5);
  CHECK(p.coeff(5) == UniPoly(1));
  CHECK(p(1, 0) == 0);
  // Direct expansion oracle: prod (y0 - a_i(x0)) at a few rational points.
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10; ++k) {
    Rational x0 = oracle::random_rational(rng), y0 = oracle::random_rational(rng);
    Rational direct = 1;
    for (const auto& a : ex) direct *= y0 - a(x0);
    CHECK(p(x0, y0) == direct);
  }
}

TEST_CASE("antiderivative_y, compose_y, definite_integral_y") {
  CHECK(antiderivative_y(B("y^2 - x*y")) == B("1/3*y^3 - 1/2*x*y^2"));
  CHECK(antiderivative_y(BiPoly(UniPoly(1))) == BiPoly::y());

  CHECK(compose_y(B("y^2 - x*y"), P("x")).is_zero());
  CHECK(compose_y(BiPoly::y(), P("x^3")) == P("x^3"));
  CHECK(compose_y(B("y^3/3 - x*y^2/2"), P("x")) == P("-1/6*x^3"));

  CHECK(definite_integral_y(B("y^2 - x*y"), UniPoly(), P("x")) == P("-1/6*x^3"));
  CHECK(definite_integral_y(B("y^2 - x*y"), P("x^2"), P("x^2")).is_zero());
  CHECK(definite_integral_y(BiPoly(UniPoly(1)), UniPoly(), P("x^2")) == P("x^2"));

  std::vector<UniPoly> ex{UniPoly(), P("x^4"), P("x^3+x^4"), P("x^2+x^3+x^4"), P("x+x^2+x^3+x^4")};
  BiPoly p = product_of_linear_factors(ex);
  BiPoly r = antiderivative_y(p);
  CHECK(r.coeff(0).is_zero());
  CHECK(derivative_y(r) == p);
}

TEST_CASE("gcd, squarefree, resultant, interpolation") {
  UniPoly a = P("x^2 - 1");
  UniPoly b = P("x^2 - 2*x + 1");
  CHECK(gcd(a, b) == P("x - 1"));
  CHECK(is_squarefree(a));
  CHECK_FALSE(is_squarefree(b));
  CHECK(squarefree_part(P("x^3 - x^2")) == P("x^2 - x"));
  // res(x - r, q) = q(r)
  CHECK(resultant(P("x - 3"), P("x^2 + 1")) == 10);
  // Sylvester oracle for two quadratics: res = (a0 b2 - a2 b0)^2 - (a0 b1 - a1 b0)(a1 b2 - a2 b1)
  UniPoly f = P("2 + 3*x + 5*x^2"), g = P("-1 + 4*x + 7*x^2");
  Rational a0 = 2, a1 = 3, a2 = 5, b0 = -1, b1 = 4, b2 = 7;
  Rational sylvester = (a0 * b2 - a2 * b0) * (a0 * b2 - a2 * b0) - (a0 * b1 - a1 * b0) * (a1 * b2 - a2 * b1);
  CHECK(resultant(f, g) == sylvester);

  std::vector<std::pair<Rational, Rational>> pts;
  UniPoly target = P("1/2 - x + 3*x^3");
  for (int k = -2; k <= 1; ++k) pts.emplace_back(k, target(k));
  CHECK(interpolate(pts) == target);
}

TEST_CASE("text syntax") {
  CHECK(to_string(P("x^2 + 1/2*x^5")) == "x^2 + 1/2*x^5");
  CHECK(to_string(UniPoly()) == "0");
  CHECK(P("3x - x^0") == P("-1 + 3*x"));
  CHECK(P("(x+1)^2") == P("1 + 2*x + x^2"));
  CHECK(to_string(B("y^3 - 3/2*x*y^2")) == "y^3 + (-3/2*x)*y^2");
  CHECK(B("y^3 + (-3/2*x)*y^2") == B("y^3 - 3/2*x*y^2"));
  CHECK(parse_unipoly("y^2 + 1", 'y') == P("x^2 + 1"));
  CHECK_THROWS_AS(P("x^"), Error);
  CHECK_THROWS_AS(P("x + y"), Error);
  CHECK_THROWS_AS(P(""), Error);
  CHECK_THROWS_AS(P("1/0*x"), Error);
}

TEST_CASE("property: arithmetic laws on random polynomials") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    UniPoly p = oracle::random_poly(rng, 6), q = oracle::random_poly(rng, 6);
    // valuation is additive under products
    CHECK(valuation_x(p * q) == valuation_x(p) + valuation_x(q));
    // trichotomy of ≺₊
    if (p != q) CHECK(precedes_right(p, q) != precedes_right(q, p));
    // parse(print(p)) == p
    CHECK(parse_unipoly(to_string(p)) == p);
    if (!q.is_zero()) {
      auto [quo, rem] = divmod(p, q);
      CHECK(quo * q + rem == p);
      CHECK(rem.degree() < q.degree());
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    BiPoly big = oracle::random_bipoly(rng, 6, 6);
    UniPoly a = oracle::random_poly(rng, 4), b = oracle::random_poly(rng, 4), c = oracle::random_poly(rng, 4);
    CHECK(derivative_y(antiderivative_y(big)) == big);
    CHECK(definite_integral_y(big, a, b) + definite_integral_y(big, b, c) == definite_integral_y(big, a, c));
    CHECK(parse_bipoly(to_string(big)) == big);
    UniPoly composed = compose_y(big, a);
    for (int k = 0; k < 20; ++k) {
      Rational x0 = oracle::random_rational(rng);
      CHECK(composed(x0) == big(x0, a(x0)));
    }
  }
}
