#include "hnstrata/kottwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hnstrata/errors.hpp"

namespace hnstrata {

Coweight IsocrystalClass::newton() const {
  Coweight out;
  for (const auto& blk : slopes) out.insert(out.end(), blk.begin(), blk.end());
  return out;
}

long IsocrystalClass::kappa_total() const {
  long s = 0;
  for (long k : kappa) s += k;
  return s;
}

bool IsocrystalClass::basic() const {
  for (const auto& blk : slopes)
    for (const auto& x : blk)
      if (x != blk.front()) return false;
  return true;
}

bool IsocrystalClass::operator<(const IsocrystalClass& o) const {
  if (levi.blocks != o.levi.blocks) return levi.blocks < o.levi.blocks;
  return slopes < o.slopes;
}

namespace {

// Each distinct slope p/q (lowest terms) must have multiplicity divisible
// by q; equivalently all Newton polygon breakpoints are integral.
bool block_integral(const std::vector<Rational>& blk) {
  std::map<Rational, int> mult;
  for (const auto& s : blk) mult[s]++;
  for (const auto& [s, m] : mult) {
    long q = s.get_den().get_si();
    if (m % q != 0) return false;
  }
  return true;
}

long block_sum_as_long(const std::vector<Rational>& blk) {
  Rational s(0);
  for (const auto& x : blk) s += x;
  return to_long(s);
}

}  // namespace

IsocrystalClass make_class(const LeviComposition& M,
                           const std::vector<std::vector<Rational>>& slopes) {
  if (slopes.size() != M.num_blocks())
    throw length_mismatch("make_class: block count mismatch");
  IsocrystalClass c;
  c.levi = M;
  c.slopes = slopes;
  for (size_t b = 0; b < slopes.size(); ++b) {
    if (static_cast<int>(slopes[b].size()) != M.blocks[b])
      throw length_mismatch("make_class: block size mismatch");
    std::sort(c.slopes[b].begin(), c.slopes[b].end(),
              [](const Rational& x, const Rational& y) { return y < x; });
    if (!block_integral(c.slopes[b]))
      throw integrality_error("make_class: non-integral Newton polygon in block " +
                              std::to_string(b) + " " + vec_to_string(c.slopes[b]));
    c.kappa.push_back(block_sum_as_long(c.slopes[b]));
  }
  return c;
}

IsocrystalClass basic_class(int n, const Rational& s) {
  return make_class(LeviComposition::group(n),
                    {std::vector<Rational>(static_cast<size_t>(n), s)});
}

bool in_kottwitz_set(const IsocrystalClass& c, const std::vector<long>& eps,
                     const Coweight& delta) {
  if (eps.size() != c.levi.num_blocks() ||
      static_cast<int>(delta.size()) != c.levi.rank())
    throw length_mismatch("in_kottwitz_set: shape mismatch");
  if (c.kappa != eps) return false;
  return dominance_leq(c.newton(), delta, c.levi);
}

std::vector<IsocrystalClass> levi_reductions(const IsocrystalClass& c,
                                             const LeviComposition& M) {
  if (!c.levi.is_group()) throw error("levi_reductions: expected a class over G");
  if (M.rank() != c.rank()) throw length_mismatch("levi_reductions: rank mismatch");
  Coweight pool = c.newton();  // weakly decreasing
  std::set<std::vector<std::vector<Rational>>> seen;
  std::vector<IsocrystalClass> out;
  size_t k = M.num_blocks();

  std::vector<std::vector<Rational>> assign(k);
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == pool.size()) {
      for (size_t b = 0; b < k; ++b)
        if (static_cast<int>(assign[b].size()) != M.blocks[b]) return;
      auto sorted = assign;
      for (auto& blk : sorted)
        std::sort(blk.begin(), blk.end(),
                  [](const Rational& x, const Rational& y) { return y < x; });
      if (!seen.insert(sorted).second) return;
      for (const auto& blk : sorted)
        if (!block_integral(blk)) return;
      out.push_back(make_class(M, sorted));
      return;
    }
    for (size_t b = 0; b < k; ++b) {
      if (static_cast<int>(assign[b].size()) >= M.blocks[b]) continue;
      assign[b].push_back(pool[pos]);
      rec(pos + 1);
      assign[b].pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

IsocrystalClass induce_to_group(const IsocrystalClass& c) {
  Coweight all = c.newton();
  std::sort(all.begin(), all.end(),
            [](const Rational& x, const Rational& y) { return y < x; });
  return make_class(LeviComposition::group(c.rank()), {all});
}

IsocrystalClass dual_class(const IsocrystalClass& c) {
  std::vector<int> rblocks(c.levi.blocks.rbegin(), c.levi.blocks.rend());
  std::vector<std::vector<Rational>> rslopes;
  for (auto it = c.slopes.rbegin(); it != c.slopes.rend(); ++it) {
    std::vector<Rational> blk;
    for (auto jt = it->rbegin(); jt != it->rend(); ++jt) blk.push_back(-*jt);
    rslopes.push_back(blk);
  }
  return make_class(LeviComposition(rblocks), rslopes);
}

IsocrystalClass hn_index(const Coweight& v, long kappa_b, const Coweight& mu) {
  if (v.size() != mu.size()) throw length_mismatch("hn_index: length mismatch");
  if (!is_dominant(v)) throw error("hn_index: v not dominant");
  Rational mu_sum = sum_of(mu);
  if (!is_integer(mu_sum)) throw error("hn_index: mu not integral");
  long kappa = kappa_b - to_long(mu_sum);
  Coweight nu = minus_w0(v);
  if (sum_of(nu) != kappa)
    throw inconsistent_kappa("hn_index: sum(nu) = " + rat_to_string(sum_of(nu)) +
                             " != kappa(b) - mu_sharp = " + std::to_string(kappa));
  IsocrystalClass c = make_class(LeviComposition::group(static_cast<int>(v.size())), {nu});
  return c;
}

Coweight bundle_slope(const IsocrystalClass& c) {
  Coweight out = av_levi(c.levi, c.newton());
  for (auto& x : out) x = -x;
  return out;
}

namespace {

// Dominant nu <= delta entrywise-in-dominance with fixed sum, entries in
// (1/L)Z; recursive with prefix-sum pruning.
void enumerate_dominant_below(const Coweight& delta, long L,
                              std::vector<Coweight>& out) {
  int n = static_cast<int>(delta.size());
  // bounds in units of 1/L
  std::vector<long> dL(n);
  Rational total(0);
  for (int i = 0; i < n; ++i) {
    Rational x = delta[i] * L;
    if (!is_integer(x)) throw error("enumerate_dominant_below: bound not in lattice");
    dL[i] = to_long(x);
    total += delta[i];
  }
  Rational totL = total * L;
  long target = to_long(totL);
  std::vector<long> cur(n);
  std::function<void(int, long, long)> rec = [&](int i, long prefix_delta,
                                                 long prefix_cur) {
    if (i == n) {
      if (prefix_cur != target) return;
      Coweight nu(n);
      for (int j = 0; j < n; ++j) nu[j] = make_rat(cur[j], L);
      out.push_back(nu);
      return;
    }
    long hi = (i == 0) ? dL[0] + 0 : cur[i - 1];
    // partial sums condition: prefix_cur + v <= prefix_delta + dL[i]
    hi = std::min(hi, prefix_delta + dL[i] - prefix_cur);
    // remaining entries are <= v, need prefix_cur + (n-i)*v >= target
    for (long v = hi; v * (n - i) + prefix_cur >= target; --v) {
      cur[i] = v;
      rec(i + 1, prefix_delta + dL[i], prefix_cur + v);
    }
  };
  if (n == 0) return;
  rec(0, 0, 0);
}

long lcm_upto(int n) {
  long l = 1;
  for (int k = 2; k <= n; ++k) l = std::lcm(l, static_cast<long>(k));
  return l;
}

}  // namespace

std::vector<IsocrystalClass> enumerate_kottwitz_set(int n, long eps,
                                                    const Coweight& delta) {
  if (static_cast<int>(delta.size()) != n)
    throw length_mismatch("enumerate_kottwitz_set: rank mismatch");
  std::vector<IsocrystalClass> out;
  Rational dsum = sum_of(delta);
  if (dsum != eps) return out;  // kappa = eps forces equal total
  long L = lcm_upto(n);
  std::vector<Coweight> cands;
  enumerate_dominant_below(delta, L, cands);
  for (const auto& nu : cands) {
    std::vector<Rational> blk(nu.begin(), nu.end());
    if (!block_integral(blk)) continue;
    out.push_back(make_class(LeviComposition::group(n), {blk}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsocrystalClass> enumerate_newton_points(int n, const Rational& lo,
                                                     const Rational& hi) {
  long L = lcm_upto(n);
  long loL = to_long(Rational(lo * L));
  long hiL = to_long(Rational(hi * L));
  std::vector<IsocrystalClass> out;
  std::vector<long> cur(static_cast<size_t>(n));
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<Rational> blk(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) blk[j] = make_rat(cur[j], L);
      if (!block_integral(blk)) return;
      out.push_back(make_class(LeviComposition::group(n), {blk}));
      return;
    }
    long top = (i == 0) ? hiL : cur[i - 1];
    for (long v = top; v >= loL; --v) {
      cur[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hnstrata
