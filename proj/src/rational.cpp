#include "snakeforge/rational.hpp"

#include <cctype>
#include <vector>

#include "snakeforge/error.hpp"

namespace snakeforge {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational dyadic(unsigned k) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return make_rational(Integer(1), den);
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    std::size_t i = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_integer = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
    return Rational(to_integer(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-')
    fail(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
  Integer d = to_integer(den);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return make_rational(to_integer(num), d);
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  // Enough binary precision for the requested decimal digits plus slack.
  mpf_class f(0, static_cast<mp_bitcnt_t>(digits * 4 + 64));
  f = q;
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  int n = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  if (n >= static_cast<int>(buf.size())) {
    buf.resize(static_cast<std::size_t>(n) + 1);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
  }
  return std::string(buf.data());
}

std::size_t Valuation::value() const {
  if (infinite_) fail(ErrorKind::InvalidArgument, "valuation of the zero polynomial is infinite");
  return value_;
}

std::string to_string(Valuation v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

}  // namespace snakeforge
