#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "hnstrata/filtspace.hpp"
#include "hnstrata/suites.hpp"

using namespace hnstrata;

namespace {

Filtration apt(std::initializer_list<const char*> xs) {
  std::vector<Rational> a;
  for (const char* x : xs) a.push_back(rat_from_string(x));
  return apartment_filtration<Rational>(a);
}

QMat rows(std::initializer_list<std::initializer_list<int>> data) {
  int m = static_cast<int>(data.size());
  int n = m ? static_cast<int>(data.begin()->size()) : 0;
  QMat A(m, n);
  int i = 0;
  for (const auto& row : data) {
    int j = 0;
    for (int x : row) A.at(i, j++) = Rational(x);
    ++i;
  }
  return A;
}

// two-step filtration with jumps 1 > 0 and V^1 the given line in k^2
Filtration line_filtration(const QMat& line) {
  return normalize_filtration<Rational>(
      2, {Rational(1), Rational(0)}, {line, QMat::identity(2)});
}

Filtration random_filtration(Rng& rng, int n) {
  // random flag adapted to random vectors with random rational jumps
  int steps = static_cast<int>(rng.uniform(1, n));
  std::vector<Rational> jumps;
  std::vector<QMat> flags;
  QMat cur(0, n);
  std::set<long> used;
  for (int s = 0; s < steps; ++s) {
    int grow = static_cast<int>(rng.uniform(1, n - cur.m - (steps - 1 - s)));
    for (int g = 0; g < grow; ++g) {
      QMat v(1, n);
      for (int j = 0; j < n; ++j) v.at(0, j) = Rational(static_cast<int>(rng.uniform(-2, 2)));
      QMat ext = row_space(vstack(cur, v));
      if (ext.m > cur.m) cur = ext;
    }
    if (cur.m == 0) {
      QMat v(1, n);
      v.at(0, static_cast<int>(rng.uniform(0, n - 1))) = Rational(1);
      cur = row_space(v);
    }
    long j;
    do { j = rng.uniform(-6, 6); } while (used.count(j));
    used.insert(j);
    jumps.push_back(make_rat(j, 2));
    flags.push_back(cur);
  }
  if (flags.back().m < n) {
    jumps.push_back(jumps.back() - 1);
    flags.push_back(QMat::identity(n));
  }
  std::sort(jumps.rbegin(), jumps.rend());
  return normalize_filtration<Rational>(n, jumps, flags);
}

}  // namespace

TEST_CASE("pairing on lines") {
  QMat L = rows({{1, 0}});
  QMat L2 = rows({{0, 1}});
  Filtration f = line_filtration(L);
  CHECK(filt_pairing(f, f) == 1);  // aligned
  Filtration g = line_filtration(L2);
  CHECK(filt_pairing(f, g) == 0);  // transverse
  CHECK(dist2(f, g) == 2);
  CHECK(dist2(f, f) == 0);
}

TEST_CASE("apartment pairing is the dot product") {
  Filtration f = apt({"3", "1", "-2"});
  Filtration g = apt({"1", "1", "5"});
  CHECK(filt_pairing(f, g) == Rational(3 + 1 - 10));
  CHECK(norm2(f) == Rational(9 + 1 + 4));
  // <f,f> = sum a_i^2
  Filtration h = apt({"1/2", "1/2", "0"});
  CHECK(norm2(h) == rat_from_string("1/2"));
  // d^2 is Euclidean inside one apartment
  CHECK(dist2(f, g) == Rational(4 + 0 + 49));
}

TEST_CASE("common_basis splits both filtrations") {
  Rng rng(3);
  for (int it = 0; it < 60; ++it) {
    int n = static_cast<int>(rng.uniform(1, 4));
    Filtration f = random_filtration(rng, n);
    Filtration g = random_filtration(rng, n);
    CommonBasis<Rational> cb = common_basis(f, g);  // internally verified
    CHECK(cb.basis.m == n);
    // pairing agrees with the apartment dot product
    Rational dot(0);
    for (size_t i = 0; i < cb.alpha.size(); ++i) dot += cb.alpha[i] * cb.beta[i];
    CHECK(filt_pairing(f, g) == dot);
  }
}

TEST_CASE("sum and scale match the apartment picture") {
  Filtration f = apt({"2", "0", "-1"});
  Filtration g = apt({"1", "1", "4"});
  CHECK(filt_sum(f, g) == apt({"3", "1", "3"}));
  CHECK(filt_scale(rat_from_string("3/2"), f) == apt({"3", "0", "-3/2"}));
}

TEST_CASE("tensor jumps and graded dimensions") {
  Filtration f = apt({"1", "0"});
  Filtration g = apt({"10", "0"});
  Filtration t = filt_tensor(f, g);
  REQUIRE(t.jumps.size() == 4);
  CHECK(t.jumps[0] == 11);
  CHECK(t.jumps[1] == 10);
  CHECK(t.jumps[2] == 1);
  CHECK(t.jumps[3] == 0);
  for (size_t i = 0; i < 4; ++i) CHECK(t.graded_dim(i) == 1);
}

TEST_CASE("tensor graded-dimension identity") {
  Rng rng(17);
  for (int it = 0; it < 40; ++it) {
    int n = static_cast<int>(rng.uniform(1, 3));
    int m = static_cast<int>(rng.uniform(1, 3));
    Filtration f = random_filtration(rng, n);
    Filtration g = random_filtration(rng, m);
    Filtration t = filt_tensor(f, g);
    std::map<Rational, int> expect;
    for (size_t i = 0; i < f.steps(); ++i)
      for (size_t j = 0; j < g.steps(); ++j) {
        Rational key = f.jumps[i] + g.jumps[j];
        expect[key] += f.graded_dim(i) * g.graded_dim(j);
      }
    std::map<Rational, int> got;
    for (size_t i = 0; i < t.steps(); ++i) got[t.jumps[i]] = t.graded_dim(i);
    CHECK(expect == got);
  }
}

TEST_CASE("direct sum splits graded pieces") {
  Filtration f = apt({"1", "0"});
  Filtration g = apt({"2", "0"});
  Filtration d = filt_direct_sum(f, g);
  CHECK(d.dim == 4);
  CHECK(filt_degree(d) == filt_degree(f) + filt_degree(g));
}

TEST_CASE("degree and energy") {
  Filtration triv = apt({"0", "0"});
  CHECK(filt_degree(triv) == 0);
  Filtration f = apt({"1", "0"});
  CHECK(filt_degree(f) == 1);
  // energy = ||f||^2 - 2 sum a deg(gr^a)
  CHECK(filt_energy(f, {Rational(2), Rational(-1)}) == Rational(1 - 2 * 2));
  CHECK_THROWS_AS(filt_energy(f, {Rational(1)}), length_mismatch);
}

TEST_CASE("concavity of the pairing") {
  Rng rng(23);
  int checked = 0;
  for (int it = 0; it < 220; ++it) {
    int n = static_cast<int>(rng.uniform(2, 4));
    Filtration f = random_filtration(rng, n);
    Filtration g = random_filtration(rng, n);
    Filtration h = random_filtration(rng, n);
    Rational lhs = filt_pairing(f, filt_sum(g, h));
    Rational rhs = filt_pairing(f, g) + filt_pairing(f, h);
    CHECK(lhs >= rhs);
    ++checked;
  }
  CHECK(checked >= 200);
  // equality in a common apartment
  Filtration f = apt({"1", "2", "0"});
  Filtration g = apt({"0", "1", "1"});
  Filtration h = apt({"5", "0", "2"});
  CHECK(filt_pairing(f, filt_sum(g, h)) == filt_pairing(f, g) + filt_pairing(f, h));
}

TEST_CASE("triangle inequality for the metric") {
  Rng rng(29);
  for (int it = 0; it < 120; ++it) {
    int n = static_cast<int>(rng.uniform(2, 4));
    Filtration f = random_filtration(rng, n);
    Filtration g = random_filtration(rng, n);
    Filtration h = random_filtration(rng, n);
    double dfg = distance(f, g), dgh = distance(g, h), dfh = distance(f, h);
    CHECK(dfh <= dfg + dgh + 1e-9);
  }
}

// the scalar field is a template parameter; a prime field works as well
namespace {
struct F5 {
  int v = 0;
  F5() = default;
  F5(int x) : v(((x % 5) + 5) % 5) {}
  friend F5 operator+(F5 a, F5 b) { return F5(a.v + b.v); }
  friend F5 operator-(F5 a, F5 b) { return F5(a.v - b.v); }
  friend F5 operator*(F5 a, F5 b) { return F5(a.v * b.v); }
  friend F5 operator/(F5 a, F5 b) {
    int inv = 1;
    for (int k = 1; k < 5; ++k)
      if ((b.v * k) % 5 == 1) inv = k;
    return F5(a.v * inv);
  }
  friend bool operator==(F5 a, F5 b) { return a.v == b.v; }
};
}  // namespace

TEST_CASE("filtration machinery over a prime field") {
  Mat<F5> line(1, 2);
  line.at(0, 0) = F5(1);
  line.at(0, 1) = F5(3);
  auto f = normalize_filtration<F5>(
      2, {Rational(1), Rational(0)}, {line, Mat<F5>::identity(2)});
  CHECK(filt_pairing(f, f) == 1);
  Mat<F5> other(1, 2);
  other.at(0, 0) = F5(1);
  auto g = normalize_filtration<F5>(
      2, {Rational(1), Rational(0)}, {other, Mat<F5>::identity(2)});
  CHECK(filt_pairing(f, g) == 0);
  CHECK(dist2(f, g) == 2);
}
