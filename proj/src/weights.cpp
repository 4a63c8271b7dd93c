#include "hnstrata/weights.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hnstrata/errors.hpp"

namespace hnstrata {

std::vector<Coweight> dominant_below(const Coweight& mu) {
  if (!is_dominant(mu)) throw error("dominant_below: mu not dominant");
  if (!is_integral(mu)) throw error("dominant_below: mu not integral");
  int n = static_cast<int>(mu.size());
  std::vector<long> m(n);
  long target = 0;
  for (int i = 0; i < n; ++i) {
    m[i] = to_long(mu[i]);
    target += m[i];
  }
  std::vector<Coweight> out;
  std::vector<long> cur(n);
  std::function<void(int, long, long)> rec = [&](int i, long prefix_mu, long prefix) {
    if (i == n) {
      if (prefix == target) {
        Coweight nu(n);
        for (int j = 0; j < n; ++j) nu[j] = Rational(static_cast<int>(cur[j]));
        out.push_back(nu);
      }
      return;
    }
    long hi = (i == 0) ? m[0] : cur[i - 1];
    hi = std::min(hi, prefix_mu + m[i] - prefix);
    for (long v = hi; v * (n - i) + prefix >= target; --v) {
      cur[i] = v;
      rec(i + 1, prefix_mu + m[i], prefix + v);
    }
  };
  if (n > 0) rec(0, 0, 0);
  return out;
}

std::vector<Coweight> sigma_m_dom(const Coweight& mu, const LeviComposition& M) {
  std::set<Coweight> acc;
  for (const auto& nu : dominant_below(mu))
    for (const auto& lam : weyl_orbit(nu))
      if (is_m_dominant(lam, M)) acc.insert(lam);
  return std::vector<Coweight>(acc.begin(), acc.end());
}

std::vector<Coweight> sigma_m_max(const Coweight& mu, const LeviComposition& M) {
  std::vector<Coweight> dom = sigma_m_dom(mu, M);
  // theta-fibers: distinct fibers are <=_M-incomparable
  std::map<std::vector<long>, std::vector<Coweight>> fibers;
  for (const auto& lam : dom) fibers[theta(lam, M)].push_back(lam);
  std::vector<Coweight> out;
  for (const auto& [t, members] : fibers) {
    for (const auto& lam : members) {
      bool maximal = true;
      for (const auto& other : members) {
        if (other == lam) continue;
        if (dominance_leq(lam, other, M)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(lam);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SMuResult s_m_mu(const Coweight& mu, const LeviComposition& M) {
  SMuResult res;
  if (M.is_group()) {
    // trivial unipotent radical: the intersection forces lambda = mu
    res.lower = res.upper = {mu};
    res.exact = true;
    return res;
  }
  res.upper = sigma_m_dom(mu, M);
  if (is_minuscule(mu) || M.is_torus()) {
    res.lower = res.upper;
    res.exact = true;
    return res;
  }
  res.lower = sigma_m_max(mu, M);
  res.exact = false;
  return res;
}

std::vector<Coweight> s_m_mu_cl(const Coweight& mu, const LeviComposition& M) {
  std::set<Coweight> acc;
  for (const auto& lam : weyl_orbit(mu))
    if (is_m_dominant(lam, M)) acc.insert(lam);
  return std::vector<Coweight>(acc.begin(), acc.end());
}

std::vector<long> theta(const Coweight& lambda, const LeviComposition& M) {
  if (static_cast<int>(lambda.size()) != M.rank())
    throw length_mismatch("theta: rank mismatch");
  std::vector<long> out;
  for (auto [b, e] : M.ranges()) {
    Rational s(0);
    for (int i = b; i < e; ++i) s += lambda[i];
    out.push_back(to_long(s));
  }
  return out;
}

}  // namespace hnstrata
