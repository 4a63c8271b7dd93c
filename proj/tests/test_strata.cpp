#include <doctest.h>

#include <algorithm>

#include "hnstrata/json_io.hpp"
#include "hnstrata/strata.hpp"
#include "hnstrata/suites.hpp"

using namespace hnstrata;

namespace {

Coweight cw(std::initializer_list<const char*> xs) {
  Coweight v;
  for (const char* x : xs) v.push_back(rat_from_string(x));
  return v;
}

IsocrystalClass gclass(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (const char* x : xs) v.push_back(rat_from_string(x));
  return make_class(LeviComposition::group(static_cast<int>(v.size())), {v});
}

const Coweight mu3 = {Rational(3), Rational(1), Rational(1)};

}  // namespace

TEST_CASE("wa_nonempty") {
  IsocrystalClass b = gclass({"5/2", "5/2", "0"});
  CHECK_FALSE(wa_nonempty(mu3, b));
  CHECK(wa_nonempty(cw({"1", "0"}), gclass({"0", "0"})));
  CHECK(wa_nonempty(cw({"1", "1", "0", "0"}), gclass({"0", "0", "0", "0"})));
}

TEST_CASE("stratum_nonempty on the GL3 anchor") {
  IsocrystalClass b = gclass({"5/2", "5/2", "0"});
  std::vector<Witness> wits;
  CHECK(stratum_nonempty(mu3, b, gclass({"1/2", "1/2", "-1"}), &wits) ==
        Verdict::yes);
  REQUIRE(!wits.empty());
  bool found = false;
  for (const auto& w : wits) {
    if (w.lambda == cw({"1", "3", "1"})) {
      found = true;
      CHECK(w.b_M.slopes[0] == std::vector<Rational>{Rational(0)});
      CHECK(w.b_M.slopes[1] == std::vector<Rational>{rat_from_string("5/2"),
                                                     rat_from_string("5/2")});
      CHECK(w.certified);
    }
  }
  CHECK(found);

  std::vector<Witness> wits2;
  CHECK(stratum_nonempty(mu3, b, gclass({"3/2", "3/2", "-3"}), &wits2) ==
        Verdict::yes);
  bool eq_witness = false;
  for (const auto& w : wits2)
    if (w.lambda == cw({"3", "1", "1"})) eq_witness = true;
  CHECK(eq_witness);

  CHECK(stratum_nonempty(mu3, b, gclass({"2", "-1", "-1"})) == Verdict::no);
  // kappa mismatch is an immediate no
  CHECK(stratum_nonempty(mu3, b, gclass({"1", "1", "-1"})) == Verdict::no);
}

TEST_CASE("witness reproduces the stratum index") {
  IsocrystalClass b = gclass({"5/2", "5/2", "0"});
  for (const char* nu : {"1/2,1/2,-1", "1,1,-2", "3/2,3/2,-3"}) {
    Coweight nv = coweight_from_csv(nu);
    IsocrystalClass bp = make_class(LeviComposition::group(3),
                                    {std::vector<Rational>(nv.begin(), nv.end())});
    std::vector<Witness> wits;
    REQUIRE(stratum_nonempty(mu3, b, bp, &wits) == Verdict::yes);
    StratumFrame fr = stratum_frame(bp);
    for (const auto& w : wits) {
      Coweight v = sub(av_levi(fr.M, w.lambda), av_levi(fr.M, w.b_M.newton()));
      CHECK(minus_w0(v) == bp.newton());
    }
  }
}

TEST_CASE("has_classical_points on the GL3 anchor") {
  IsocrystalClass b = gclass({"5/2", "5/2", "0"});
  CHECK(has_classical_points(mu3, b, gclass({"1/2", "1/2", "-1"})));
  CHECK_FALSE(has_classical_points(mu3, b, gclass({"1", "1", "-2"})));
  CHECK(has_classical_points(mu3, b, gclass({"3/2", "3/2", "-3"})));
}

TEST_CASE("fiber_dim") {
  CHECK(fiber_dim(cw({"1", "1", "0", "0"}), cw({"1", "1", "0", "0"}),
                  LeviComposition({2, 2})) == 0);
  CHECK(fiber_dim(cw({"1", "1", "0", "0"}), cw({"1", "0", "1", "0"}),
                  LeviComposition({2, 2})) == 1);
  CHECK(fiber_dim(mu3, cw({"1", "3", "1"}), LeviComposition({1, 2})) == 2);
}

TEST_CASE("stratum_dim") {
  IsocrystalClass one4 = gclass({"0", "0", "0", "0"});
  Coweight mu = cw({"1", "1", "0", "0"});
  CHECK(stratum_dim(mu, one4, gclass({"-1/2", "-1/2", "-1/2", "-1/2"})) == 4);
  CHECK(stratum_dim(mu, one4, gclass({"0", "0", "-1", "-1"})) == 0);
  IsocrystalClass one2 = gclass({"0", "0"});
  CHECK(stratum_dim(cw({"1", "0"}), one2, gclass({"0", "-1"})) == 0);
  CHECK_THROWS_AS(stratum_dim(mu3, gclass({"5/2", "5/2", "0"}),
                              gclass({"1/2", "1/2", "-1"})),
                  not_minuscule);
  CHECK_THROWS_AS(stratum_dim(mu, one4, gclass({"2", "0", "0", "-2"})),
                  empty_stratum);
}

TEST_CASE("enumerate_strata GL2") {
  IsocrystalClass one = gclass({"0", "0"});
  auto recs = enumerate_strata(cw({"1", "0"}), one);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].b_prime.newton() == cw({"-1/2", "-1/2"}));
  REQUIRE(recs[0].dimension.has_value());
  CHECK(*recs[0].dimension == 1);
  CHECK(recs[1].b_prime.newton() == cw({"0", "-1"}));
  CHECK(*recs[1].dimension == 0);
  for (const auto& r : recs) {
    CHECK(r.nonempty == Verdict::yes);
    CHECK(r.classical);
  }
}

TEST_CASE("enumerate_strata GL4 minuscule") {
  IsocrystalClass one = gclass({"0", "0", "0", "0"});
  auto recs = enumerate_strata(cw({"1", "1", "0", "0"}), one);
  bool basic_found = false, zero_dim_found = false;
  for (const auto& r : recs) {
    REQUIRE(r.nonempty == Verdict::yes);
    REQUIRE(r.dimension.has_value());
    if (r.b_prime.basic()) {
      basic_found = true;
      CHECK(*r.dimension == 4);
    }
    if (r.b_prime.newton() == cw({"0", "0", "-1", "-1"})) {
      zero_dim_found = true;
      CHECK(*r.dimension == 0);
    }
  }
  CHECK(basic_found);
  CHECK(zero_dim_found);
}

TEST_CASE("enumerate_strata GL3 anchor") {
  IsocrystalClass b = gclass({"5/2", "5/2", "0"});
  auto recs = enumerate_strata(mu3, b);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].b_prime.newton() == cw({"1/2", "1/2", "-1"}));
  CHECK(recs[1].b_prime.newton() == cw({"1", "1", "-2"}));
  CHECK(recs[2].b_prime.newton() == cw({"3/2", "3/2", "-3"}));
  CHECK(recs[0].classical);
  CHECK_FALSE(recs[1].classical);
  CHECK(recs[2].classical);
  for (const auto& r : recs) {
    CHECK(r.nonempty == Verdict::yes);
    CHECK(r.b_prime.kappa_total() == 0);
    CHECK(sum_of(r.b_prime.newton()) == 0);
    // the levi of the record is the constancy-run composition
    CHECK(r.levi == LeviComposition({1, 2}));
    // cross-check with the standalone verdicts
    CHECK(stratum_nonempty(mu3, b, r.b_prime) == Verdict::yes);
  }
  // no basic (semistable) stratum appears
  for (const auto& r : recs) CHECK_FALSE(r.b_prime.basic());
}

TEST_CASE("minuscule strata always carry classical points") {
  Rng rng(83);
  for (int it = 0; it < 25; ++it) {
    int n = static_cast<int>(rng.uniform(2, 5));
    int k = static_cast<int>(rng.uniform(0, n));
    Coweight mu(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < k; ++i) mu[static_cast<size_t>(i)] = Rational(1);
    long den = rng.coin(0.5) ? 1 : n;
    IsocrystalClass b = basic_class(n, make_rat(rng.uniform(-2, 2), den));
    for (const auto& r : enumerate_strata(mu, b)) {
      CHECK(r.nonempty == Verdict::yes);
      CHECK(r.classical);
    }
  }
}

TEST_CASE("basic stratum verdict agrees with wa_nonempty") {
  // small grid here; the acceptance suite runs the exhaustive one
  for (const auto& b : enumerate_newton_points(3, Rational(-1), Rational(1))) {
    for (long a = -2; a <= 2; ++a)
      for (long c = -2; c <= a; ++c)
        for (long d = -2; d <= c; ++d) {
          Coweight mu = {Rational(static_cast<int>(a)), Rational(static_cast<int>(c)),
                         Rational(static_cast<int>(d))};
          long kp = b.kappa_total() - to_long(sum_of(mu));
          IsocrystalClass bp = basic_class(3, make_rat(kp, 3));
          Verdict v = stratum_nonempty(mu, b, bp);
          CHECK(v != Verdict::unknown);
          CHECK((v == Verdict::yes) == wa_nonempty(mu, b));
        }
  }
}
