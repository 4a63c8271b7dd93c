#include <doctest.h>

#include <algorithm>
#include <set>

#include "hnstrata/weights.hpp"

using namespace hnstrata;

namespace {

Coweight cw(std::initializer_list<const char*> xs) {
  Coweight v;
  for (const char* x : xs) v.push_back(rat_from_string(x));
  return v;
}

bool contains(const std::vector<Coweight>& xs, const Coweight& v) {
  return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

TEST_CASE("sigma_m_dom") {
  auto s = sigma_m_dom(cw({"1", "1", "0"}), LeviComposition({2, 1}));
  CHECK(s.size() == 2);
  CHECK(contains(s, cw({"1", "1", "0"})));
  CHECK(contains(s, cw({"1", "0", "1"})));

  auto t = sigma_m_dom(cw({"1", "0"}), LeviComposition::torus(2));
  CHECK(t.size() == 2);

  auto g = dominant_below(cw({"3", "1", "1"}));
  CHECK(g.size() == 2);
  CHECK(contains(g, cw({"3", "1", "1"})));
  CHECK(contains(g, cw({"2", "2", "1"})));
}

TEST_CASE("sigma_m_max") {
  auto mx = sigma_m_max(cw({"3", "1", "1"}), LeviComposition({1, 2}));
  CHECK(mx.size() == 3);
  CHECK(contains(mx, cw({"1", "3", "1"})));
  CHECK_FALSE(contains(mx, cw({"1", "2", "2"})));

  // minuscule: max = dom
  Coweight mu = cw({"1", "1", "0", "0"});
  for (const auto& M : all_compositions(4))
    CHECK(sigma_m_max(mu, M) == sigma_m_dom(mu, M));
  // M = T: max = dom
  Coweight mu2 = cw({"3", "1", "0"});
  CHECK(sigma_m_max(mu2, LeviComposition::torus(3)) ==
        sigma_m_dom(mu2, LeviComposition::torus(3)));
}

TEST_CASE("s_m_mu certification") {
  auto r = s_m_mu(cw({"1", "1", "0", "0"}), LeviComposition({2, 2}));
  CHECK(r.exact);
  CHECK(r.lower.size() == 3);
  CHECK(contains(r.lower, cw({"1", "1", "0", "0"})));
  CHECK(contains(r.lower, cw({"1", "0", "1", "0"})));
  CHECK(contains(r.lower, cw({"0", "0", "1", "1"})));

  auto g = s_m_mu(cw({"3", "1", "1"}), LeviComposition::group(3));
  CHECK(g.exact);
  CHECK(g.lower == std::vector<Coweight>{cw({"3", "1", "1"})});

  auto h = s_m_mu(cw({"3", "1", "1"}), LeviComposition({1, 2}));
  CHECK_FALSE(h.exact);
  CHECK(contains(h.lower, cw({"1", "3", "1"})));
  CHECK(h.lower.size() < h.upper.size());
  for (const auto& lam : h.lower) CHECK(contains(h.upper, lam));
}

TEST_CASE("s_m_mu_cl") {
  auto c = s_m_mu_cl(cw({"3", "1", "1"}), LeviComposition({1, 2}));
  CHECK(c.size() == 2);
  CHECK(contains(c, cw({"3", "1", "1"})));
  CHECK(contains(c, cw({"1", "3", "1"})));

  // minuscule: matches the upper bound set
  Coweight mu = cw({"1", "0", "0"});
  for (const auto& M : all_compositions(3))
    CHECK(s_m_mu_cl(mu, M) == s_m_mu(mu, M).upper);

  CHECK(s_m_mu_cl(cw({"2", "1", "0"}), LeviComposition::group(3)) ==
        std::vector<Coweight>{cw({"2", "1", "0"})});
}

TEST_CASE("theta") {
  CHECK(theta(cw({"1", "3", "1"}), LeviComposition({1, 2})) ==
        std::vector<long>{1, 4});
  CHECK(theta(cw({"0", "0", "0"}), LeviComposition({3})) == std::vector<long>{0});
  CHECK(theta(cw({"2", "2", "1"}), LeviComposition({1, 2})) ==
        std::vector<long>{2, 3});
}

TEST_CASE("every member keeps the total sum") {
  Coweight mu = cw({"2", "1", "-1"});
  for (const auto& M : all_compositions(3))
    for (const auto& lam : sigma_m_dom(mu, M)) CHECK(sum_of(lam) == sum_of(mu));
}
