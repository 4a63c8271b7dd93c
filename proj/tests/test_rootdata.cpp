#include <doctest.h>

#include <algorithm>

#include "hnstrata/rootdata.hpp"
#include "hnstrata/suites.hpp"

using namespace hnstrata;

namespace {

Coweight cw(std::initializer_list<const char*> xs) {
  Coweight v;
  for (const char* x : xs) v.push_back(rat_from_string(x));
  return v;
}

Coweight random_coweight(Rng& rng, int n, long lo, long hi, long den) {
  Coweight v;
  for (int i = 0; i < n; ++i)
    v.push_back(make_rat(rng.uniform(lo * den, hi * den), den));
  return v;
}

}  // namespace

TEST_CASE("dominance_leq block partial sums") {
  auto G3 = LeviComposition::group(3);
  CHECK_FALSE(dominance_leq(cw({"5/2", "5/2", "0"}), cw({"3", "1", "1"}), G3));
  Coweight v = cw({"1/2", "1/2", "-1"});
  CHECK(dominance_leq(v, v, G3));
  CHECK(dominance_leq(v, cw({"1", "1", "-2"}), G3));
  CHECK_THROWS_AS(dominance_leq(cw({"1"}), cw({"1", "0"}), LeviComposition::group(2)),
                  length_mismatch);
}

TEST_CASE("dominance_leq is a partial order on random triples") {
  Rng rng(7);
  for (int it = 0; it < 300; ++it) {
    int n = static_cast<int>(rng.uniform(1, 5));
    auto G = LeviComposition::group(n);
    Coweight a = random_coweight(rng, n, -3, 3, 2);
    CHECK(dominance_leq(a, a, G));  // reflexive
    // antisymmetric on equal-block-sum vectors
    Coweight b = random_coweight(rng, n, -3, 3, 2);
    Rational shift = (sum_of(a) - sum_of(b)) / n;
    for (auto& x : b) x += shift;
    if (dominance_leq(a, b, G) && dominance_leq(b, a, G)) CHECK(a == b);
    // transitive
    Coweight c = random_coweight(rng, n, -3, 3, 2);
    Rational shift2 = (sum_of(a) - sum_of(c)) / n;
    for (auto& x : c) x += shift2;
    if (dominance_leq(a, b, G) && dominance_leq(b, c, G))
      CHECK(dominance_leq(a, c, G));
  }
}

TEST_CASE("weyl_orbit distinct permutations") {
  CHECK(weyl_orbit(cw({"1", "1", "0"})).size() == 3);
  CHECK(weyl_orbit(cw({"0", "0", "0"})).size() == 1);
  CHECK(weyl_orbit(cw({"3", "1", "1"})).size() == 3);
  // n! / prod(multiplicities!)
  CHECK(weyl_orbit(cw({"2", "1", "0", "-1"})).size() == 24);
  CHECK(weyl_orbit(cw({"1", "1", "0", "0"})).size() == 6);
}

TEST_CASE("av_levi block means") {
  auto M = LeviComposition({2, 1});
  CHECK(av_levi(M, cw({"1", "0", "1"})) == cw({"1/2", "1/2", "1"}));
  CHECK(av_levi(LeviComposition::group(3), cw({"3", "1", "1"})) ==
        cw({"5/3", "5/3", "5/3"}));
  Coweight v = cw({"1", "-2", "7"});
  CHECK(av_levi(LeviComposition::torus(3), v) == v);
}

TEST_CASE("av_levi idempotent and pairing-compatible with block-constant chi") {
  Rng rng(11);
  for (int it = 0; it < 100; ++it) {
    int n = static_cast<int>(rng.uniform(1, 5));
    auto comps = all_compositions(n);
    const auto& M = comps[static_cast<size_t>(rng.uniform(0, static_cast<long>(comps.size()) - 1))];
    Coweight v = random_coweight(rng, n, -4, 4, 3);
    Coweight a = av_levi(M, v);
    CHECK(av_levi(M, a) == a);
    Coweight chi(static_cast<size_t>(n));
    for (auto [b, e] : M.ranges()) {
      Rational c = make_rat(rng.uniform(-3, 3), 1);
      for (int i = b; i < e; ++i) chi[static_cast<size_t>(i)] = c;
    }
    CHECK(pairing(a, chi) == pairing(v, chi));
  }
}

TEST_CASE("half_sum") {
  CHECK(half_sum(LeviComposition::group(3), 3) == cw({"1", "0", "-1"}));
  CHECK(half_sum(LeviComposition({2, 2}), 4) == cw({"1/2", "-1/2", "1/2", "-1/2"}));
  CHECK(half_sum(LeviComposition::group(4), 4) ==
        cw({"3/2", "1/2", "-1/2", "-3/2"}));
}

TEST_CASE("pairing") {
  CHECK(pairing(cw({"3", "1", "1"}), cw({"1", "0", "-1"})) == 2);
  CHECK(pairing(cw({"1", "1", "0", "0"}), cw({"3", "1", "-1", "-3"})) == 4);
  CHECK(pairing(cw({"5", "-2"}), cw({"0", "0"})) == 0);
  CHECK_THROWS_AS(pairing(cw({"1"}), cw({"1", "2"})), length_mismatch);
}

TEST_CASE("minus_w0") {
  CHECK(minus_w0(cw({"1", "-1/2", "-1/2"})) == cw({"1/2", "1/2", "-1"}));
  CHECK(minus_w0(cw({"0", "0", "0"})) == cw({"0", "0", "0"}));
  CHECK(minus_w0(cw({"0", "-2"})) == cw({"2", "0"}));
}

TEST_CASE("minus_w0 involution preserving dominance") {
  Rng rng(13);
  for (int it = 0; it < 200; ++it) {
    int n = static_cast<int>(rng.uniform(1, 6));
    Coweight v = random_coweight(rng, n, -4, 4, 2);
    CHECK(minus_w0(minus_w0(v)) == v);
    std::sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return b < a; });
    CHECK(is_dominant(minus_w0(v)));
  }
}

TEST_CASE("minuscule predicate") {
  CHECK(is_minuscule(cw({"1", "1", "0", "0"})));
  CHECK(is_minuscule(cw({"2", "2", "2"})));
  CHECK(is_minuscule(cw({"0", "0", "-1"})));
  CHECK_FALSE(is_minuscule(cw({"3", "1", "1"})));
  CHECK_FALSE(is_minuscule(cw({"1/2", "1/2"})));
}
