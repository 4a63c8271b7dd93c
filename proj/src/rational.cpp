#include "hnstrata/rational.hpp"

#include <cctype>
#include <sstream>

namespace hnstrata {

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool saw_digit = false, saw_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      saw_digit = true;
    } else if (s[i] == '/' && !saw_slash && saw_digit) {
      saw_slash = true;
      saw_digit = false;
    } else {
      throw parse_error("bad rational literal: \"" + s + "\"");
    }
  }
  if (!saw_digit) throw parse_error("bad rational literal: \"" + s + "\"");
  Rational r;
  if (r.set_str(s, 10) != 0) throw parse_error("bad rational literal: \"" + s + "\"");
  if (r.get_den() == 0) throw parse_error("zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rational& r) { return r.get_str(); }

Rational rat_gcd(const Rational& a, const Rational& b) {
  mpz_class n, l;
  mpz_gcd(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Rational r(n, l);
  r.canonicalize();
  return r;
}

std::string vec_to_string(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << rat_to_string(v[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace hnstrata
