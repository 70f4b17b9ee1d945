#include "snakeforge/snake_extract.hpp"

#include <algorithm>
#include <numeric>

#include "snakeforge/error.hpp"

namespace snakeforge {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p};
  if (p.degree() < 1) return seq;
  seq.push_back(derivative(p));
  while (true) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return seq;
}

std::size_t sign_variations(const std::vector<UniPoly>& seq, const Rational& t) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = sgn(s(t));
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

std::size_t count_roots(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

namespace {

// Power of two strictly above every root's magnitude (Cauchy bound).
Rational root_bound(const UniPoly& p) {
  Rational lead = abs(p.leading());
  Rational m = 0;
  for (long k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(static_cast<std::size_t>(k))) / lead));
  Rational b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

std::size_t multiplicity_in(const UniPoly& p, const Rational& lo, const Rational& hi) {
  std::size_t mult = 0;
  UniPoly g = p;
  while (g.degree() >= 1) {
    auto seq = sturm_sequence(squarefree_part(g));
    if (count_roots(seq, lo, hi) == 0) break;
    ++mult;
    g = gcd(g, derivative(g));
  }
  return mult;
}

}  // namespace

void refine(IsolatedRoot& root, const std::vector<UniPoly>& seq) {
  if (root.exact) return;
  Rational mid = (root.lo + root.hi) / 2;
  if (count_roots(seq, root.lo, mid) == 1) {
    root.hi = mid;
    root.exact = seq.front()(mid) == 0;
  } else {
    root.lo = mid;
  }
}

std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<IsolatedRoot> out;
  if (p.degree() < 1) return out;
  const UniPoly sqf = squarefree_part(p);
  const auto seq = sturm_sequence(sqf);
  const Rational bound = root_bound(sqf);

  struct Pending {
    Rational lo, hi;
    std::size_t count;
  };
  std::vector<Pending> stack{{-bound, bound, count_roots(seq, -bound, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      IsolatedRoot r{cur.lo, cur.hi, 1, sqf(cur.hi) == 0};
      out.push_back(r);
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / 2;
    std::size_t left = count_roots(seq, cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.hi < b.hi; });
  if (sqf.degree() != p.degree())
    for (auto& r : out) r.multiplicity = multiplicity_in(p, r.lo, r.hi);
  return out;
}

std::vector<IsolatedRoot> isolate_critical_points(const UniPoly& p) {
  if (p.degree() < 2) fail(ErrorKind::InvalidArgument, "critical points need degree >= 2");
  return isolate_real_roots(derivative(p));
}

const char* to_string(MorseStatus s) {
  switch (s) {
    case MorseStatus::Pass: return "Pass";
    case MorseStatus::NonRealCriticalPoint: return "NonRealCriticalPoint";
    case MorseStatus::RepeatedCriticalPoint: return "RepeatedCriticalPoint";
    case MorseStatus::RepeatedCriticalValue: return "RepeatedCriticalValue";
  }
  return "Unknown";
}

UniPoly critical_value_resultant(const UniPoly& p) {
  if (p.degree() < 2) fail(ErrorKind::InvalidArgument, "critical values need degree >= 2");
  const UniPoly d = derivative(p);
  // deg_z V = deg p', so deg p sample points determine it.
  std::vector<std::pair<Rational, Rational>> samples;
  for (long z = 0; z < p.degree(); ++z) samples.emplace_back(Rational(z), resultant(d, UniPoly(Rational(z)) - p));
  return interpolate(samples);
}

MorseStatus morse_check(const UniPoly& p) {
  if (p.degree() < 2) fail(ErrorKind::InvalidArgument, "Morse check needs degree >= 2");
  const UniPoly d = derivative(p);
  if (!is_squarefree(d)) return MorseStatus::RepeatedCriticalPoint;
  const auto seq = sturm_sequence(d);
  const Rational bound = root_bound(d);
  if (count_roots(seq, -bound, bound) != static_cast<std::size_t>(d.degree())) return MorseStatus::NonRealCriticalPoint;
  if (!is_squarefree(critical_value_resultant(p))) return MorseStatus::RepeatedCriticalValue;
  return MorseStatus::Pass;
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval mul(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval horner(const UniPoly& p, const Interval& x) {
  Interval acc{0, 0};
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, x);
    acc.lo += *it;
    acc.hi += *it;
  }
  return acc;
}

// Centered form p(m) + p'([lo, hi]) * [lo - m, hi - m]; tight near critical
// points, where p' is small.
Interval value_enclosure(const UniPoly& p, const UniPoly& dp, const IsolatedRoot& r) {
  if (r.exact) {
    Rational v = p(r.hi);
    return {v, v};
  }
  Rational mid = (r.lo + r.hi) / 2;
  Rational pm = p(mid);
  Interval slope = horner(dp, {r.lo, r.hi});
  Interval off = mul(slope, {r.lo - mid, r.hi - mid});
  return {pm + off.lo, pm + off.hi};
}

bool overlaps(const Interval& a, const Interval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

}  // namespace

MorseCertificate arnold_snake_of(const UniPoly& p) {
  if (p.degree() < 2) fail(ErrorKind::InvalidArgument, "Arnold snake needs degree >= 2");
  if (p.leading() <= 0) fail(ErrorKind::NonPositiveLeading, "leading coefficient " + to_string(p.leading()));
  const UniPoly q = monic(p);
  const MorseStatus status = morse_check(q);
  if (status != MorseStatus::Pass) fail(ErrorKind::NotMorse, to_string(status));

  MorseCertificate cert;
  cert.degree = static_cast<std::size_t>(p.degree());
  cert.leading_coefficient = p.leading();
  cert.critical_points = isolate_critical_points(q);
  const UniPoly dq = derivative(q);
  const auto seq = sturm_sequence(monic(dq));
  const std::size_t n = cert.critical_points.size();

  // Distinct critical values are certified above, so refinement terminates.
  constexpr std::size_t kMaxRefinements = 10000;
  std::vector<std::size_t> refinements(n, 0);
  std::vector<Interval> values(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = value_enclosure(q, dq, cert.critical_points[k]);
  while (true) {
    std::vector<bool> needs(n, false);
    bool any = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (overlaps(values[a], values[b])) needs[a] = needs[b] = any = true;
    if (!any) break;
    for (std::size_t k = 0; k < n; ++k) {
      if (!needs[k] || cert.critical_points[k].exact) continue;
      if (++refinements[k] > kMaxRefinements)
        fail(ErrorKind::ContractViolation, "critical value refinement did not separate the values");
      refine(cert.critical_points[k], seq);
      values[k] = value_enclosure(q, dq, cert.critical_points[k]);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a].lo < values[b].lo; });
  std::vector<int> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<int>(r + 1);
  cert.critical_value_order = Permutation(std::move(rank));
  if (!is_snake(cert.critical_value_order))
    fail(ErrorKind::ContractViolation, "critical values of a Morse polynomial failed to alternate");
  return cert;
}

}  // namespace snakeforge
