#include "hnstrata/isocengine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hnstrata/errors.hpp"

namespace hnstrata {

long NormedIsocrystal::dim() const {
  long s = 0;
  for (long x : slopes) s += x;
  return s;
}

bool NormedIsocrystal::slopes_distinct() const {
  std::set<long> s(slopes.begin(), slopes.end());
  return s.size() == slopes.size();
}

long FilteredIsocrystal::dim() const {
  long s = 0;
  for (long x : slopes) s += x;
  return s;
}

Coweight relative_position(const LatticePresentation& g) {
  std::vector<long> divs = elementary_divisors(g);  // increasing
  Coweight mu;
  for (long d : divs) mu.push_back(Rational(static_cast<int>(-d)));
  return mu;  // decreasing
}

namespace {

std::vector<int> mask_to_subset(unsigned mask) {
  std::vector<int> S;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) S.push_back(i);
  return S;
}

long slopes_sum_over(const std::vector<long>& slopes, unsigned mask) {
  long s = 0;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) s += slopes[static_cast<size_t>(i)];
  return s;
}

}  // namespace

long sub_degree(const NormedIsocrystal& D, const std::vector<int>& S) {
  if (S.empty()) throw error("sub_degree: empty subset");
  long dval = det_valuation(D.lattice.mat);
  long div_sum = intersection_divisor_sum(D.lattice, S, dval);
  long slope_sum = 0;
  for (int i : S) slope_sum += D.slopes[static_cast<size_t>(i)];
  return -div_sum - slope_sum;
}

long total_degree(const NormedIsocrystal& D) {
  std::vector<int> all(static_cast<size_t>(D.rank()));
  for (int i = 0; i < D.rank(); ++i) all[static_cast<size_t>(i)] = i;
  return sub_degree(D, all);
}

long nu_distance(const LatticePresentation& a, const LatticePresentation& b) {
  if (a.n != b.n) throw length_mismatch("nu_distance: rank mismatch");
  // route 1: common adapted basis from the Smith pivots of adj(a)*b
  LMat H(a.n, a.n);
  {
    // adj(a) * b, column by column through Cramer on b's columns
    for (int j = 0; j < b.n; ++j) {
      for (int i = 0; i < a.n; ++i) {
        LMat M = a.mat;
        for (int r = 0; r < a.n; ++r) M.at(r, i) = b.mat.at(r, j);
        H.at(i, j) = bareiss_det(M);  // det(a) * (a^{-1} b)[i][j]
      }
    }
  }
  std::vector<long> hv = local_valuations(H);
  if (static_cast<int>(hv.size()) != a.n)
    throw singular_matrix("nu_distance: singular input");
  long dva = det_valuation(a.mat);
  long route1 = 0;
  for (long v : hv) route1 -= v - dva;  // nu = -sum of divisors of a^{-1}b
  // route 2: determinant valuations
  long route2 = dva - det_valuation(b.mat);
  if (route1 != route2)
    throw error("nu_distance: adapted-basis and determinant routes disagree");
  return route2;
}

std::vector<long> degree_table(const NormedIsocrystal& D) {
  int n = D.rank();
  if (n > 10) throw error("degree_table: rank too large");
  // deg(S) = v_tot(rows of the complement) - val(det) - slopes(S): one
  // shared minor-valuation pass covers every subset at once
  MinorValuations mv = minor_valuations(D.lattice.mat);
  unsigned full = (1u << n) - 1u;
  if (static_cast<int>(mv.vk.size()) != n + 1)
    throw singular_matrix("degree_table: singular presentation");
  long dval = mv.row_val[full];
  std::vector<long> table(full + 1u, 0);
  for (unsigned mask = 1; mask <= full; ++mask)
    table[mask] = mv.row_val[full & ~mask] - dval - slopes_sum_over(D.slopes, mask);
  return table;
}

namespace {

// Greedy maximal-destabilizing chain over a bitmask degree table.
HNResult greedy_hn(int n, const std::vector<long>& deg) {
  HNResult res;
  unsigned full = (1u << n) - 1u;
  unsigned base = 0;
  while (base != full) {
    unsigned rem = full & ~base;
    bool have = false;
    Rational best_slope(0);
    int best_size = 0;
    unsigned best_step = 0;
    int tie_count = 0;
    // nonempty submasks of rem; maximal slope, then maximal cardinality
    for (unsigned step = rem; step != 0; step = (step - 1) & rem) {
      int size = __builtin_popcount(step);
      long d = deg[base | step] - deg[base];
      Rational slope = make_rat(d, size);
      if (!have || best_slope < slope || (slope == best_slope && size > best_size)) {
        have = true;
        best_slope = slope;
        best_size = size;
        best_step = step;
        tie_count = 1;
      } else if (slope == best_slope && size == best_size) {
        ++tie_count;
      }
    }
    if (tie_count != 1)
      throw error("hn_filtration: maximal destabilizing subobject not unique");
    unsigned prev = base;
    base |= best_step;
    res.chain.push_back(mask_to_subset(base));
    res.graded_slopes.push_back(best_slope);
    res.graded_degrees.push_back(deg[base] - deg[prev]);
    res.graded_ranks.push_back(best_size);
    for (int k = 0; k < best_size; ++k) res.v.push_back(best_slope);
  }
  for (size_t i = 1; i < res.graded_slopes.size(); ++i)
    if (!(res.graded_slopes[i] < res.graded_slopes[i - 1]))
      throw error("hn_filtration: graded slopes not strictly decreasing");
  return res;
}

}  // namespace

HNResult hn_from_degree_table(int n, const std::vector<long>& deg) {
  return greedy_hn(n, deg);
}

HNResult hn_filtration(const NormedIsocrystal& D) {
  if (!D.slopes_distinct())
    throw repeated_slopes("hn_filtration: repeated isocrystal slopes");
  std::vector<long> deg = degree_table(D);
  HNResult res = greedy_hn(D.rank(), deg);
  long total = 0;
  for (long d : res.graded_degrees) total += d;
  if (total != deg.back()) throw error("hn_filtration: degree additivity broken");
  return res;
}

Filtration HNResult::as_filtration(int n) const {
  std::vector<Rational> jumps;
  std::vector<QMat> flags;
  for (size_t t = 0; t < chain.size(); ++t) {
    QMat W(static_cast<int>(chain[t].size()), n);
    for (size_t r = 0; r < chain[t].size(); ++r)
      W.at(static_cast<int>(r), chain[t][r]) = Rational(1);
    jumps.push_back(graded_slopes[t]);
    flags.push_back(W);
  }
  return normalize_filtration<Rational>(n, jumps, flags);
}

IsocrystalClass hn_class(const NormedIsocrystal& D) {
  HNResult hn = hn_filtration(D);
  Coweight mu = relative_position(D.lattice);
  return hn_index(hn.v, D.dim(), mu);
}

NormedIsocrystal tensor(const NormedIsocrystal& a, const NormedIsocrystal& b) {
  NormedIsocrystal c;
  for (long s : a.slopes)
    for (long t : b.slopes) c.slopes.push_back(s + t);
  c.lattice.n = a.lattice.n * b.lattice.n;
  c.lattice.mat = kronecker(a.lattice.mat, b.lattice.mat);
  return c;
}

NormedIsocrystal direct_sum(const NormedIsocrystal& a, const NormedIsocrystal& b) {
  NormedIsocrystal c;
  c.slopes = a.slopes;
  c.slopes.insert(c.slopes.end(), b.slopes.begin(), b.slopes.end());
  c.lattice.n = a.lattice.n + b.lattice.n;
  c.lattice.mat = block_diag(a.lattice.mat, b.lattice.mat);
  return c;
}

NormedIsocrystal dual(const NormedIsocrystal& a) {
  NormedIsocrystal c;
  for (long s : a.slopes) c.slopes.push_back(-s);
  c.lattice = dual_lattice(a.lattice);
  return c;
}

NormedIsocrystal quotient(const NormedIsocrystal& D, const std::vector<int>& S) {
  std::vector<bool> in(static_cast<size_t>(D.rank()), false);
  for (int i : S) in[static_cast<size_t>(i)] = true;
  std::vector<int> T;
  NormedIsocrystal q;
  for (int i = 0; i < D.rank(); ++i)
    if (!in[static_cast<size_t>(i)]) {
      T.push_back(i);
      q.slopes.push_back(D.slopes[static_cast<size_t>(i)]);
    }
  q.lattice = projection_to_coordinates(D.lattice, T);
  return q;
}

Filtration residue_filtration(const LatticePresentation& g) {
  AdaptedBasis ab = adapted_basis(g);
  int n = g.n;
  // F^i = span of the residues of basis columns with -exps[j] >= i
  std::vector<long> mu_of_col(ab.exps.size());
  for (size_t j = 0; j < ab.exps.size(); ++j) mu_of_col[j] = -ab.exps[j];
  std::vector<long> jump_vals(mu_of_col);
  std::sort(jump_vals.begin(), jump_vals.end());
  jump_vals.erase(std::unique(jump_vals.begin(), jump_vals.end()), jump_vals.end());
  std::vector<Rational> jumps;
  std::vector<QMat> flags;
  for (auto it = jump_vals.rbegin(); it != jump_vals.rend(); ++it) {
    QMat W(0, n);
    for (int j = 0; j < n; ++j) {
      if (mu_of_col[static_cast<size_t>(j)] < *it) continue;
      QMat row(1, n);
      for (int i = 0; i < n; ++i) row.at(0, i) = ab.basis.at(i, j).coeff(0);
      W = vstack(W, row);
    }
    jumps.push_back(Rational(static_cast<int>(*it)));
    flags.push_back(W);
  }
  Filtration f = normalize_filtration<Rational>(n, jumps, flags);
  // jump multiset must equal the relative position
  Coweight mu = relative_position(g);
  Coweight jm;
  for (size_t t = 0; t < f.steps(); ++t)
    for (int k = 0; k < f.graded_dim(t); ++k) jm.push_back(f.jumps[t]);
  if (jm != mu) throw error("residue_filtration: jump multiset mismatch");
  return f;
}

long filtered_sub_degree(const FilteredIsocrystal& D, const std::vector<int>& S) {
  if (S.empty()) throw error("filtered_sub_degree: empty subset");
  int n = D.rank();
  const Filtration& f = D.filtration;
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (int i : S) in[static_cast<size_t>(i)] = true;
  std::vector<int> T;
  for (int i = 0; i < n; ++i)
    if (!in[static_cast<size_t>(i)]) T.push_back(i);
  // dim(V^a /\ span_S) = dim V^a - rank(V^a projected onto T); the degree
  // telescopes over the jumps taken in descending order.
  Rational acc(0);
  int higher_meet = 0;
  for (size_t t = 0; t < f.steps(); ++t) {
    const QMat& W = f.flags[t];
    QMat proj(W.m, static_cast<int>(T.size()));
    for (int i = 0; i < W.m; ++i)
      for (size_t j = 0; j < T.size(); ++j)
        proj.at(i, static_cast<int>(j)) = W.at(i, T[j]);
    int meet = W.m - rank_of(proj);
    acc += f.jumps[t] * (meet - higher_meet);
    higher_meet = meet;
  }
  long slope_sum = 0;
  for (int i : S) slope_sum += D.slopes[static_cast<size_t>(i)];
  if (!is_integer(acc)) throw error("filtered_sub_degree: non-integral degree");
  return to_long(acc) - slope_sum;
}

HNResult filtered_hn(const FilteredIsocrystal& D) {
  std::set<long> distinct(D.slopes.begin(), D.slopes.end());
  if (distinct.size() != D.slopes.size())
    throw repeated_slopes("filtered_hn: repeated isocrystal slopes");
  int n = D.rank();
  if (n >= 20) throw error("filtered_hn: rank too large");
  std::vector<long> deg(1u << n, 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    deg[mask] = filtered_sub_degree(D, mask_to_subset(mask));
  return greedy_hn(n, deg);
}

IsocrystalClass filtered_hn_class(const FilteredIsocrystal& D, long kappa_b,
                                  const Coweight& mu) {
  HNResult hn = filtered_hn(D);
  return hn_index(hn.v, kappa_b, mu);
}

FilteredIsocrystal bb_image(const NormedIsocrystal& D) {
  FilteredIsocrystal f;
  f.slopes = D.slopes;
  f.filtration = residue_filtration(D.lattice);
  return f;
}

LatticePresentation classical_lattice(const QMat& x, const Coweight& mu) {
  if (x.m != x.n || static_cast<int>(mu.size()) != x.n)
    throw length_mismatch("classical_lattice: shape mismatch");
  if (!is_integral(mu)) throw error("classical_lattice: mu not integral");
  if (det(x) == Rational(0)) throw singular_matrix("classical_lattice: x singular");
  LatticePresentation g;
  g.n = x.n;
  g.mat = LMat(x.n, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      if (x.at(i, j) == Rational(0)) continue;
      g.mat.at(i, j) = Laurent::monomial(x.at(i, j), -to_long(mu[static_cast<size_t>(j)]));
    }
  return g;
}

}  // namespace hnstrata
