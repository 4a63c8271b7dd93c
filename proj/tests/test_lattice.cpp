#include <doctest.h>

#include "hnstrata/lattice.hpp"
#include "hnstrata/suites.hpp"

using namespace hnstrata;

namespace {

Laurent lp(const std::string& s) { return laurent_from_string(s, "t"); }

LatticePresentation lat(std::initializer_list<std::initializer_list<const char*>> rows) {
  int n = static_cast<int>(rows.size());
  LMat M(n, n);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* e : row) M.at(i, j++) = lp(e);
    ++i;
  }
  return LatticePresentation{n, M};
}

}  // namespace

TEST_CASE("laurent arithmetic and parsing") {
  Laurent a = lp("3*t^-2 + 1/2*t + 4");
  CHECK(a.valuation() == -2);
  CHECK(a.degree() == 1);
  CHECK(a.coeff(0) == 4);
  CHECK(lp("t") * lp("t^-1") == Laurent::one());
  CHECK(lp("t + 1") * lp("t - 1") == lp("t^2 - 1"));
  Laurent q, r;
  poly_divmod(lp("t^3 + 1"), lp("t + 1"), q, r);
  CHECK(q == lp("t^2 - t + 1"));
  CHECK(r.is_zero());
  CHECK(exact_div(lp("t^2 - 1"), lp("t - 1")) == lp("t + 1"));
  // round trip through the string form
  CHECK(lp(laurent_to_string(a, "t")) == a);
  CHECK(lp("0").is_zero());
  CHECK_THROWS_AS(lp("t^"), parse_error);
}

TEST_CASE("determinant routes agree") {
  Rng rng(41);
  for (int it = 0; it < 50; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    LMat M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.coin(0.8))
          M.at(i, j) = Laurent::monomial(Rational(static_cast<int>(rng.uniform(-3, 3))),
                                         rng.uniform(-2, 2));
    CHECK(bareiss_det(M) == laplace_det(M));
  }
}

TEST_CASE("elementary divisors") {
  CHECK(elementary_divisors(lat({{"t^2", "0"}, {"0", "t^-1"}})) ==
        std::vector<long>{-1, 2});
  CHECK(elementary_divisors(lat({{"1", "1"}, {"t", "0"}})) ==
        std::vector<long>{0, 1});
  CHECK(elementary_divisors(LatticePresentation::standard(3)) ==
        std::vector<long>{0, 0, 0});
  CHECK_THROWS_AS(elementary_divisors(lat({{"1", "1"}, {"1", "1"}})),
                  singular_matrix);
}

TEST_CASE("elimination fast path matches the minor oracle") {
  Rng rng(43);
  for (int it = 0; it < 60; ++it) {
    int m = static_cast<int>(rng.uniform(1, 4));
    int n = static_cast<int>(rng.uniform(1, 4));
    LMat M(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (rng.coin(0.7)) {
          Laurent e = Laurent::zero();
          int terms = static_cast<int>(rng.uniform(1, 2));
          for (int t = 0; t < terms; ++t)
            e = e + Laurent::monomial(Rational(static_cast<int>(rng.uniform(-2, 2))),
                                      rng.uniform(-2, 2));
          M.at(i, j) = e;
        }
    CHECK(local_valuations(M) == local_valuations_minors(M));
  }
}

TEST_CASE("gauge valuation") {
  auto std2 = LatticePresentation::standard(2);
  std::vector<Laurent> e1 = {Laurent::one(), Laurent::zero()};
  CHECK(gauge_valuation(std2, e1) == 0);
  std::vector<Laurent> t3e1 = {lp("t^3"), Laurent::zero()};
  CHECK(gauge_valuation(std2, t3e1) == 3);
  auto g = lat({{"t^-1", "0"}, {"1", "1"}});
  CHECK(gauge_valuation(g, e1) == 1);
  std::vector<Laurent> zero2 = {Laurent::zero(), Laurent::zero()};
  CHECK_THROWS_AS(gauge_valuation(g, zero2), zero_vector);
}

TEST_CASE("lattice equality by mutual membership") {
  auto g = lat({{"t^-1", "0"}, {"1", "1"}});
  // right-multiplying by a unit of O keeps the lattice
  auto h = lat({{"t^-1", "1"}, {"1", "1 + t"}});  // c2 <- t*c1 + c2
  CHECK(lattice_equal(g, h));
  CHECK_FALSE(lattice_equal(g, LatticePresentation::standard(2)));
  CHECK(lattice_equal(g, g));
}

TEST_CASE("adapted basis reproduces the lattice") {
  Rng rng(47);
  for (int it = 0; it < 30; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    // random invertible: unit-triangular times monomial diagonal
    LMat L = LMat::identity(n), D(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j)
        if (rng.coin(0.6))
          L.at(i, j) = Laurent::monomial(Rational(static_cast<int>(rng.uniform(-2, 2))),
                                         rng.uniform(-2, 2));
      D.at(i, i) = Laurent::monomial(Rational(1), rng.uniform(-2, 2));
    }
    LatticePresentation g{n, matmul(L, D)};
    AdaptedBasis ab = adapted_basis(g);
    LMat M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        M.at(i, j) = shifted(ab.basis.at(i, j), ab.exps[static_cast<size_t>(j)]);
    CHECK(lattice_equal(g, LatticePresentation{n, M}));
  }
}

TEST_CASE("intersection and projection lattices") {
  auto g = lat({{"t^-1", "0"}, {"1", "1"}});
  // Xi /\ K e1 = t^-1 O e1
  auto i1 = intersection_with_coordinates(g, {0});
  CHECK(elementary_divisors(i1) == std::vector<long>{-1});
  auto i2 = intersection_with_coordinates(g, {1});
  CHECK(elementary_divisors(i2) == std::vector<long>{0});
  // degree additivity: divisors(total) = divisors(sub) + divisors(quotient)
  Rng rng(53);
  for (int it = 0; it < 25; ++it) {
    int n = static_cast<int>(rng.uniform(2, 4));
    LMat L = LMat::identity(n), U = LMat::identity(n), D(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i > j && rng.coin(0.5))
          L.at(i, j) = Laurent::monomial(Rational(static_cast<int>(rng.uniform(-2, 2))),
                                         rng.uniform(-1, 1));
        if (i < j && rng.coin(0.5))
          U.at(i, j) = Laurent::monomial(Rational(static_cast<int>(rng.uniform(-2, 2))),
                                         rng.uniform(-1, 1));
      }
    for (int i = 0; i < n; ++i) D.at(i, i) = Laurent::monomial(Rational(1), rng.uniform(-2, 2));
    LatticePresentation g2{n, matmul(matmul(L, D), U)};
    long dval = det_valuation(g2.mat);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> S, T;
      for (int c = 0; c < n; ++c)
        (mask & (1u << c) ? S : T).push_back(c);
      long sub = 0;
      for (long d : elementary_divisors(intersection_with_coordinates(g2, S))) sub += d;
      long quot = 0;
      for (long d : elementary_divisors(projection_to_coordinates(g2, T))) quot += d;
      CHECK(sub + quot == dval);
      CHECK(intersection_divisor_sum(g2, S, dval) == sub);
    }
  }
}

TEST_CASE("dual lattice divisors are negated-reversed") {
  auto g = lat({{"t^2", "0"}, {"0", "t^-1"}});
  CHECK(elementary_divisors(dual_lattice(g)) == std::vector<long>{-2, 1});
  Rng rng(59);
  for (int it = 0; it < 20; ++it) {
    int n = static_cast<int>(rng.uniform(1, 3));
    LMat L = LMat::identity(n), D(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j)
        if (rng.coin(0.5)) L.at(i, j) = lp("1 + t");
      D.at(i, i) = Laurent::monomial(Rational(1), rng.uniform(-2, 2));
    }
    LatticePresentation g2{n, matmul(L, D)};
    std::vector<long> divs = elementary_divisors(g2);
    std::vector<long> dd = elementary_divisors(dual_lattice(g2));
    std::vector<long> expect;
    for (auto it2 = divs.rbegin(); it2 != divs.rend(); ++it2) expect.push_back(-*it2);
    CHECK(dd == expect);
  }
}
