#include "snakeforge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "snakeforge/error.hpp"

namespace snakeforge {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

Valuation valuation_x(const UniPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) return Valuation(k);
  return Valuation::infinity();
}

Rational lowest_coefficient(const UniPoly& p) {
  auto v = valuation_x(p);
  if (v.is_infinite()) fail(ErrorKind::InvalidArgument, "lowest coefficient of the zero polynomial");
  return p.coeff(v.value());
}

bool precedes_right(const UniPoly& p, const UniPoly& q) {
  UniPoly d = q - p;
  if (d.is_zero()) fail(ErrorKind::EqualPolynomials, "precedes_right on equal polynomials " + to_string(p));
  return lowest_coefficient(d) > 0;
}

UniPoly derivative(const UniPoly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Rational> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(out));
}

UniPoly antiderivative(const UniPoly& p) {
  const auto& c = p.coeffs();
  if (c.empty()) return {};
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / static_cast<unsigned long>(k + 1);
  return UniPoly(std::move(out));
}

UniPoly compose(const UniPoly& p, const UniPoly& q) {
  UniPoly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + UniPoly(*it);
  return acc;
}

UniPoly pow(const UniPoly& p, unsigned k) {
  UniPoly result(1);
  UniPoly base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorKind::InvalidArgument, "division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const auto& d = b.coeffs();
  if (rem.size() < d.size()) return {UniPoly(), a};
  std::vector<Rational> quo(rem.size() - d.size() + 1);
  const Rational& lead = d.back();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational f = rem[k + d.size() - 1] / lead;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a, v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = monic(r);
  }
  return monic(u);
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() < 1) return monic(p);
  return monic(divmod(p, gcd(p, derivative(p))).first);
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  UniPoly u = a, v = b;
  Rational acc = 1;
  while (true) {
    long du = u.degree(), dv = v.degree();
    if (dv == 0) {
      Rational lv = v.leading();
      Rational r = 1;
      for (long k = 0; k < du; ++k) r *= lv;
      return acc * r;
    }
    UniPoly r = divmod(u, v).second;
    if (r.is_zero()) return 0;
    // res(u, v) = (-1)^(du dv) lc(v)^(du - dr) res(v, r)
    if ((du * dv) % 2 == 1) acc = -acc;
    Rational lv = v.leading();
    for (long k = 0; k < du - r.degree(); ++k) acc *= lv;
    u = std::move(v);
    v = std::move(r);
  }
}

UniPoly interpolate(std::span<const std::pair<Rational, Rational>> points) {
  // Newton divided differences.
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational den = points[i].first - points[i - level].first;
      if (den == 0) fail(ErrorKind::InvalidArgument, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * UniPoly(std::vector<Rational>{-points[i].first, 1}) + UniPoly(dd[i]);
  return acc;
}

// ---------------------------------------------------------------- printing

namespace {

// Appends "c*v^k" with the sign folded into the separator.
void append_term(std::string& out, const Rational& c, std::size_t k, char var) {
  bool negative = c < 0;
  Rational mag = negative ? Rational(-c) : c;
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (k == 0) {
    out += to_string(mag);
    return;
  }
  if (mag != 1) out += to_string(mag) + "*";
  out += var;
  if (k > 1) out += "^" + std::to_string(k);
}

}  // namespace

std::string to_string(const UniPoly& p, char var) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) append_term(out, c[k], k, var);
  return out.empty() ? "0" : out;
}

std::string to_string(const BiPoly& p) {
  std::string out;
  const auto& c = p.y_coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    const UniPoly& coef = c[k];
    if (coef.is_zero()) continue;
    if (coef.degree() == 0) {
      append_term(out, coef.leading(), k, 'y');
      continue;
    }
    if (!out.empty()) out += " + ";
    out += "(" + to_string(coef, 'x') + ")";
    if (k >= 1) out += "*y";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- parsing

namespace {

// Recursive-descent parser over sums of products of factors. Values are
// BiPoly: `inner` maps to x, `outer` (if any) maps to y.
class PolyParser {
 public:
  PolyParser(std::string_view text, char inner, std::optional<char> outer)
      : text_(text), inner_(inner), outer_(outer) {}

  BiPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) error("empty polynomial");
    BiPoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == inner_ || (outer_ && c == *outer_);
  }

  BiPoly expr() {
    BiPoly acc;
    bool first = true;
    while (true) {
      char c = peek();
      bool negative = false;
      if (c == '+' || c == '-') {
        negative = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      BiPoly t = term();
      if (negative) t *= Rational(-1);
      acc += t;
      first = false;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        Integer den = integer();
        if (den == 0) error("zero denominator");
        acc *= make_rational(Integer(1), den);
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly factor() {
    BiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (k > 100000) error("exponent too large");
      BiPoly r = BiPoly(UniPoly(1));
      for (unsigned long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  BiPoly primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer();
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = integer();
        if (den == 0) error("zero denominator");
      }
      return BiPoly(UniPoly(make_rational(num, den)));
    }
    if (c == '(') {
      ++pos_;
      BiPoly v = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return v;
    }
    if (c == inner_) {
      ++pos_;
      return BiPoly(UniPoly::variable());
    }
    if (outer_ && c == *outer_) {
      ++pos_;
      return BiPoly::y();
    }
    if (c == '\0') error("unexpected end of input");
    error(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char inner_;
  std::optional<char> outer_;
};

}  // namespace

UniPoly parse_unipoly(std::string_view text, char var) {
  BiPoly b = PolyParser(text, var, std::nullopt).parse();
  return b.coeff(0);
}

BiPoly parse_bipoly(std::string_view text) { return PolyParser(text, 'x', 'y').parse(); }

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<UniPoly> y_coeffs) : coeffs_(std::move(y_coeffs)) { trim(); }

BiPoly::BiPoly(const UniPoly& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly BiPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : UniPoly(); }

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y + (*it)(x);
  return acc;
}

UniPoly BiPoly::at_x(const Rational& x0) const {
  std::vector<Rational> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c(x0));
  return UniPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<UniPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BiPoly(std::move(out));
}

BiPoly product_of_linear_factors(std::span<const UniPoly> roots) {
  BiPoly acc(UniPoly(1));
  for (const auto& a : roots) acc = acc * BiPoly(std::vector<UniPoly>{-a, UniPoly(1)});
  return acc;
}

BiPoly derivative_y(const BiPoly& p) {
  const auto& c = p.y_coeffs();
  if (c.size() <= 1) return {};
  std::vector<UniPoly> out(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * Rational(static_cast<unsigned long>(k));
  return BiPoly(std::move(out));
}

BiPoly antiderivative_y(const BiPoly& p) {
  const auto& c = p.y_coeffs();
  if (c.empty()) return {};
  std::vector<UniPoly> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k)
    out[k + 1] = c[k] * make_rational(1, static_cast<long>(k + 1));
  return BiPoly(std::move(out));
}

UniPoly compose_y(const BiPoly& p, const UniPoly& a) {
  UniPoly acc;
  const auto& c = p.y_coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
  return acc;
}

UniPoly definite_integral_y(const BiPoly& p, const UniPoly& lo, const UniPoly& hi) {
  BiPoly r = antiderivative_y(p);
  return compose_y(r, hi) - compose_y(r, lo);
}

}  // namespace snakeforge
