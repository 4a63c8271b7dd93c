#include "hnstrata/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hnstrata/errors.hpp"

namespace hnstrata {

LeviComposition::LeviComposition(std::vector<int> b) : blocks(std::move(b)) {
  if (blocks.empty()) throw error("LeviComposition: empty composition");
  for (int m : blocks)
    if (m <= 0) throw error("LeviComposition: nonpositive block size");
}

int LeviComposition::rank() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

bool LeviComposition::is_torus() const {
  for (int m : blocks)
    if (m != 1) return false;
  return true;
}

std::vector<std::pair<int, int>> LeviComposition::ranges() const {
  std::vector<std::pair<int, int>> out;
  int at = 0;
  for (int m : blocks) {
    out.emplace_back(at, at + m);
    at += m;
  }
  return out;
}

LeviComposition LeviComposition::torus(int n) {
  return LeviComposition(std::vector<int>(static_cast<size_t>(n), 1));
}

std::string LeviComposition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << blocks[i];
  }
  os << ")";
  return os.str();
}

std::vector<LeviComposition> all_compositions(int n) {
  std::vector<LeviComposition> out;
  std::vector<int> cur;
  // compositions in lexicographic order of block vectors
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back(LeviComposition(cur));
      return;
    }
    for (int k = 1; k <= rem; ++k) {
      cur.push_back(k);
      rec(rem - k);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

bool is_dominant(const Coweight& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

bool is_m_dominant(const Coweight& v, const LeviComposition& M) {
  if (static_cast<int>(v.size()) != M.rank())
    throw length_mismatch("is_m_dominant: rank mismatch");
  for (auto [b, e] : M.ranges())
    for (int i = b + 1; i < e; ++i)
      if (v[i - 1] < v[i]) return false;
  return true;
}

bool is_integral(const Coweight& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

Rational sum_of(const Coweight& v) {
  Rational s(0);
  for (const auto& x : v) s += x;
  return s;
}

bool dominance_leq(const Coweight& v, const Coweight& w, const LeviComposition& M) {
  if (v.size() != w.size() || static_cast<int>(v.size()) != M.rank())
    throw length_mismatch("dominance_leq: length mismatch");
  for (auto [b, e] : M.ranges()) {
    Rational partial(0);
    for (int i = b; i < e; ++i) {
      partial += w[i] - v[i];
      if (partial < 0) return false;
    }
    if (partial != 0) return false;  // block sums must agree
  }
  return true;
}

std::vector<Coweight> weyl_orbit(const Coweight& lambda) {
  Coweight s = lambda;
  std::sort(s.begin(), s.end());
  std::vector<Coweight> out;
  do {
    out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

Coweight av_levi(const LeviComposition& M, const Coweight& v) {
  if (static_cast<int>(v.size()) != M.rank())
    throw length_mismatch("av_levi: rank mismatch");
  Coweight out(v.size());
  for (auto [b, e] : M.ranges()) {
    Rational mean(0);
    for (int i = b; i < e; ++i) mean += v[i];
    mean /= (e - b);
    for (int i = b; i < e; ++i) out[i] = mean;
  }
  return out;
}

Coweight half_sum(const LeviComposition& M, int n) {
  if (M.rank() != n) throw length_mismatch("half_sum: rank mismatch");
  Coweight rho;
  rho.reserve(static_cast<size_t>(n));
  for (int m : M.blocks)
    for (int j = 0; j < m; ++j) rho.push_back(make_rat(m - 1 - 2 * j, 2));
  return rho;
}

Rational pairing(const Coweight& v, const Coweight& chi) {
  if (v.size() != chi.size()) throw length_mismatch("pairing: length mismatch");
  Rational s(0);
  for (size_t i = 0; i < v.size(); ++i) s += v[i] * chi[i];
  return s;
}

Coweight minus_w0(const Coweight& v) {
  Coweight out(v.rbegin(), v.rend());
  for (auto& x : out) x = -x;
  return out;
}

Coweight add(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw length_mismatch("add: length mismatch");
  Coweight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Coweight sub(const Coweight& a, const Coweight& b) {
  if (a.size() != b.size()) throw length_mismatch("sub: length mismatch");
  Coweight c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool is_minuscule(const Coweight& mu) {
  if (mu.empty()) return true;
  if (!is_integral(mu)) return false;
  Rational mx = mu[0], mn = mu[0];
  for (const auto& x : mu) {
    mx = std::max(mx, x);
    mn = std::min(mn, x);
  }
  Rational spread = mx - mn;
  return spread == 0 || spread == 1;
}

}  // namespace hnstrata
