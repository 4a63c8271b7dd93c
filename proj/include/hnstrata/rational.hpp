#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hnstrata/errors.hpp"

namespace hnstrata {

// Exact arithmetic throughout; doubles appear only in distance() and timings.
using Rational = mpq_class;

inline Rational make_rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q".
Rational rat_from_string(const std::string& s);

// Inverse of rat_from_string: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Requires is_integer(r); valid for values fitting in long.
inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw error("to_long: not an integer: " + rat_to_string(r));
  return r.get_num().get_si();
}

std::string vec_to_string(const std::vector<Rational>& v);

// gcd(n1/d1, n2/d2) = gcd(n1, n2) / lcm(d1, d2), nonnegative.
Rational rat_gcd(const Rational& a, const Rational& b);

}  // namespace hnstrata
