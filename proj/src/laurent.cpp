#include "hnstrata/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hnstrata/errors.hpp"

namespace hnstrata {

Laurent Laurent::constant(const Rational& c) { return monomial(c, 0); }

Laurent Laurent::monomial(const Rational& c, long exp) {
  Laurent a;
  if (c == 0) return a;
  a.lo = exp;
  a.coef = {c};
  return a;
}

void Laurent::normalize() {
  size_t b = 0, e = coef.size();
  while (b < e && coef[b] == 0) ++b;
  while (e > b && coef[e - 1] == 0) --e;
  if (b == e) {
    lo = 0;
    coef.clear();
    return;
  }
  lo += static_cast<long>(b);
  coef = std::vector<Rational>(coef.begin() + b, coef.begin() + e);
}

std::optional<long> Laurent::valuation() const {
  if (is_zero()) return std::nullopt;
  return lo;
}

std::optional<long> Laurent::degree() const {
  if (is_zero()) return std::nullopt;
  return lo + static_cast<long>(coef.size()) - 1;
}

Rational Laurent::coeff(long exp) const {
  if (is_zero() || exp < lo || exp >= lo + static_cast<long>(coef.size()))
    return Rational(0);
  return coef[static_cast<size_t>(exp - lo)];
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.lo, b.lo);
  long hi = std::max(*a.degree(), *b.degree());
  Laurent c;
  c.lo = lo;
  c.coef.assign(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (size_t k = 0; k < a.coef.size(); ++k) c.coef[a.lo - lo + k] += a.coef[k];
  for (size_t k = 0; k < b.coef.size(); ++k) c.coef[b.lo - lo + k] += b.coef[k];
  c.normalize();
  return c;
}

Laurent operator-(const Laurent& a) {
  Laurent c = a;
  for (auto& x : c.coef) x = -x;
  return c;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return Laurent::zero();
  Laurent c;
  c.lo = a.lo + b.lo;
  c.coef.assign(a.coef.size() + b.coef.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coef.size(); ++i) {
    if (a.coef[i] == 0) continue;
    for (size_t j = 0; j < b.coef.size(); ++j) c.coef[i + j] += a.coef[i] * b.coef[j];
  }
  c.normalize();
  return c;
}

bool operator==(const Laurent& a, const Laurent& b) {
  return a.lo == b.lo && a.coef == b.coef;
}

Laurent shifted(const Laurent& a, long k) {
  Laurent c = a;
  if (!c.is_zero()) c.lo += k;
  return c;
}

Laurent scalar_mul(const Rational& c, const Laurent& a) {
  if (c == 0) return Laurent::zero();
  Laurent b = a;
  for (auto& x : b.coef) x *= c;
  return b;
}

void poly_divmod(const Laurent& a, const Laurent& b, Laurent& q, Laurent& r) {
  if (b.is_zero()) throw error("poly_divmod: division by zero");
  if (b.lo < 0 || (!a.is_zero() && a.lo < 0))
    throw error("poly_divmod: negative exponents");
  q = Laurent::zero();
  r = a;
  long db = *b.degree();
  const Rational& lead_b = b.coef.back();
  while (!r.is_zero() && *r.degree() >= db) {
    long k = *r.degree() - db;
    Rational c = r.coef.back() / lead_b;
    Laurent t = Laurent::monomial(c, k);
    q = q + t;
    r = r - t * b;
  }
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw error("exact_div: division by zero");
  if (a.is_zero()) return Laurent::zero();
  long shift = a.lo - b.lo;
  Laurent ap = shifted(a, -a.lo), bp = shifted(b, -b.lo);
  Laurent q, r;
  poly_divmod(ap, bp, q, r);
  if (!r.is_zero()) throw error("exact_div: nonzero remainder");
  return shifted(q, shift);
}

namespace {

// One term of a Laurent sum: [coef][*]var[^exp] in any of the shapes
// "5", "-1/2", "t", "-t", "3*t^2", "t^-1".
Laurent parse_term(const std::string& term, const std::string& var) {
  std::string s;
  for (char ch : term)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw parse_error("empty Laurent term");
  Rational coef(1);
  size_t pos = 0;
  bool neg = false;
  while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') neg = !neg;
    ++pos;
  }
  size_t num_start = pos;
  while (pos < s.size() &&
         (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
    ++pos;
  if (pos > num_start) coef = rat_from_string(s.substr(num_start, pos - num_start));
  if (neg) coef = -coef;
  if (pos < s.size() && s[pos] == '*') ++pos;
  long exp = 0;
  if (pos < s.size()) {
    if (s.compare(pos, var.size(), var) != 0)
      throw parse_error("bad Laurent term: \"" + term + "\"");
    pos += var.size();
    exp = 1;
    if (pos < s.size()) {
      if (s[pos] != '^') throw parse_error("bad Laurent term: \"" + term + "\"");
      ++pos;
      bool eneg = false;
      if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) eneg = (s[pos++] == '-');
      if (pos == s.size()) throw parse_error("bad exponent in \"" + term + "\"");
      long e = 0;
      for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos])))
          throw parse_error("bad exponent in \"" + term + "\"");
        e = e * 10 + (s[pos] - '0');
      }
      exp = eneg ? -e : e;
    }
  } else if (pos == num_start) {
    throw parse_error("bad Laurent term: \"" + term + "\"");
  }
  return Laurent::monomial(coef, exp);
}

}  // namespace

Laurent laurent_from_string(const std::string& s, const std::string& var) {
  // split into terms at '+'/'-' that are not exponent signs; a splitting
  // '-' stays attached to the next term
  std::vector<std::string> terms;
  std::string cur;
  char prev_nonspace = 0;
  bool cur_has_content = false;
  for (char ch : s) {
    bool is_sign = (ch == '+' || ch == '-');
    if (is_sign && cur_has_content && prev_nonspace != '^') {
      terms.push_back(cur);
      cur = (ch == '-') ? "-" : "";
      cur_has_content = false;
      prev_nonspace = ch;
      continue;
    }
    cur += ch;
    if (!std::isspace(static_cast<unsigned char>(ch))) {
      prev_nonspace = ch;
      if (!is_sign) cur_has_content = true;
    }
  }
  terms.push_back(cur);
  Laurent acc = Laurent::zero();
  bool any = false;
  for (const auto& t : terms) {
    bool blank = true;
    for (char ch : t)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    acc = acc + parse_term(t, var);
    any = true;
  }
  if (!any) throw parse_error("empty Laurent literal: \"" + s + "\"");
  return acc;
}

std::string laurent_to_string(const Laurent& a, const std::string& var) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = a.coef.size(); k-- > 0;) {
    Rational c = a.coef[k];
    if (c == 0) continue;
    long e = a.lo + static_cast<long>(k);
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (e == 0) {
      os << rat_to_string(c);
    } else {
      if (c == 1) {
      } else if (c == -1) {
        os << "-";
      } else {
        os << rat_to_string(c) << "*";
      }
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace hnstrata
