#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnstrata/rational.hpp"

namespace hnstrata {

// Finite Laurent polynomial sum c_i xi^i over the rationals, stored densely
// from the lowest exponent. Zero is the empty coefficient vector.
struct Laurent {
  long lo = 0;
  std::vector<Rational> coef;  // coef[k] is the coefficient of xi^(lo+k)

  Laurent() = default;
  explicit Laurent(int c) { *this = constant(Rational(c)); }
  static Laurent zero() { return Laurent{}; }
  static Laurent constant(const Rational& c);
  static Laurent monomial(const Rational& c, long exp);
  static Laurent one() { return constant(Rational(1)); }

  bool is_zero() const { return coef.empty(); }
  // Lowest exponent with nonzero coefficient; nullopt for 0.
  std::optional<long> valuation() const;
  // Highest exponent with nonzero coefficient; nullopt for 0.
  std::optional<long> degree() const;
  Rational coeff(long exp) const;

  void normalize();  // trim zero coefficients at both ends
};

Laurent operator+(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a, const Laurent& b);
Laurent operator*(const Laurent& a, const Laurent& b);
Laurent operator-(const Laurent& a);
bool operator==(const Laurent& a, const Laurent& b);
inline bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

Laurent shifted(const Laurent& a, long k);  // multiply by xi^k
Laurent scalar_mul(const Rational& c, const Laurent& a);

// Euclidean division of the polynomial parts: a = q*b + r with
// deg r < deg b, after factoring xi powers out of b. Requires
// val(a) >= val(b) is NOT needed; a is shifted so exponents stay integral.
// Both a and b must have nonnegative exponents (polynomials); b != 0.
void poly_divmod(const Laurent& a, const Laurent& b, Laurent& q, Laurent& r);

// Exact division a/b, asserting zero remainder (used by fraction-free
// elimination). Works for general Laurent operands.
Laurent exact_div(const Laurent& a, const Laurent& b);

// Parse "3*t^-2 + 1/2*t + 4" style sums; the variable name is `var`.
Laurent laurent_from_string(const std::string& s, const std::string& var);
std::string laurent_to_string(const Laurent& a, const std::string& var);

}  // namespace hnstrata
