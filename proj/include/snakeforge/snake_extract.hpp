#pragma once

#include <cstddef>
#include <vector>

#include "snakeforge/permutation.hpp"
#include "snakeforge/poly.hpp"

namespace snakeforge {

/// A real root isolated in the half-open interval (lo, hi]. When `exact`, the
/// root equals hi.
struct IsolatedRoot {
  Rational lo;
  Rational hi;
  std::size_t multiplicity = 1;
  bool exact = false;
};

// Signed remainder sequence of a squarefree polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);
// Sign variations of the sequence at t, zeros dropped.
std::size_t sign_variations(const std::vector<UniPoly>& seq, const Rational& t);
// Distinct real roots of the sequence's first polynomial in (lo, hi].
std::size_t count_roots(const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi);

// Disjoint sorted intervals, one per distinct real root of p.
std::vector<IsolatedRoot> isolate_real_roots(const UniPoly& p);
// Roots of the derivative of p. Precondition: degree(p) >= 2.
std::vector<IsolatedRoot> isolate_critical_points(const UniPoly& p);

// Halves the interval, keeping the root. Marks it exact when the new upper
// end is the root itself.
void refine(IsolatedRoot& root, const std::vector<UniPoly>& seq);

enum class MorseStatus { Pass, NonRealCriticalPoint, RepeatedCriticalPoint, RepeatedCriticalValue };

const char* to_string(MorseStatus s);

// V(z) = res_y(p'(y), z - p(y)); its roots are the critical values of p.
UniPoly critical_value_resultant(const UniPoly& p);

MorseStatus morse_check(const UniPoly& p);

struct MorseCertificate {
  std::size_t degree = 0;
  Rational leading_coefficient;
  std::vector<IsolatedRoot> critical_points;
  Permutation critical_value_order;
};

// Arnold snake of a Morse polynomial with positive leading coefficient.
// Throws NonPositiveLeading, NotMorse, InvalidArgument (degree < 2).
MorseCertificate arnold_snake_of(const UniPoly& p);

}  // namespace snakeforge
