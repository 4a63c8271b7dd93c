#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "hnstrata/linalg.hpp"
#include "hnstrata/rational.hpp"

namespace hnstrata {

// Separated exhaustive decreasing R-filtration of F^n by subspaces, with
// rational jumps. Stored as strictly decreasing jumps a_1 > ... > a_k and
// the strictly growing flag W_1 < ... < W_k = F^n, W_i = V^{a_i} in reduced
// row-echelon basis (canonical, so == is filtration equality). W_1 != 0;
// V^a = 0 for a > a_1.
template <class F>
struct RFiltrationT {
  int dim = 0;
  std::vector<Rational> jumps;
  std::vector<Mat<F>> flags;

  size_t steps() const { return jumps.size(); }
  int graded_dim(size_t i) const {
    return flags[i].m - (i == 0 ? 0 : flags[i - 1].m);
  }
  bool operator==(const RFiltrationT& o) const {
    return dim == o.dim && jumps == o.jumps && flags == o.flags;
  }
};

template <class F>
RFiltrationT<F> normalize_filtration(int dim, std::vector<Rational> jumps,
                                     std::vector<Mat<F>> flags) {
  // sort by jump descending, canonicalize flags, drop trivial steps
  std::vector<size_t> idx(jumps.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return jumps[b] < jumps[a]; });
  RFiltrationT<F> f;
  f.dim = dim;
  int prev_dim = 0;
  for (size_t t = 0; t < idx.size(); ++t) {
    Mat<F> W = row_space(flags[idx[t]]);
    if (W.m == prev_dim) continue;  // no new graded piece at this jump
    if (W.m < prev_dim) throw error("normalize_filtration: flags not nested");
    f.jumps.push_back(jumps[idx[t]]);
    f.flags.push_back(W);
    prev_dim = W.m;
  }
  if (f.flags.empty() || f.flags.back().m != dim)
    throw error("normalize_filtration: filtration not exhaustive");
  for (size_t t = 1; t < f.flags.size(); ++t)
    if (!subspace_leq(f.flags[t - 1], f.flags[t]))
      throw error("normalize_filtration: flags not nested");
  return f;
}

// Filtration split by the standard basis, entry i sitting at value a[i].
template <class F>
RFiltrationT<F> apartment_filtration(const std::vector<Rational>& a) {
  int n = static_cast<int>(a.size());
  std::vector<Rational> vals(a.begin(), a.end());
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  std::vector<Rational> jumps;
  std::vector<Mat<F>> flags;
  for (auto it = vals.rbegin(); it != vals.rend(); ++it) {
    Mat<F> W(0, n);
    for (int i = 0; i < n; ++i) {
      if (a[i] < *it) continue;
      Mat<F> e(1, n);
      e.at(0, i) = F(1);
      W = vstack(W, e);
    }
    jumps.push_back(*it);
    flags.push_back(W);
  }
  return normalize_filtration<F>(n, jumps, flags);
}

// V^a as a subspace (rows): the flag at the smallest jump >= a, zero when
// a exceeds the top jump.
template <class F>
Mat<F> filtration_at(const RFiltrationT<F>& f, const Rational& a) {
  for (size_t i = f.steps(); i-- > 0;)
    if (!(f.jumps[i] < a)) return f.flags[i];
  return Mat<F>(0, f.dim);
}

namespace detail {
// dim(V_f^{a_i} /\ V_g^{b_j}) table, with a virtual full step appended to
// each so the margins are available.
template <class F>
std::vector<std::vector<int>> meet_dims(const RFiltrationT<F>& f,
                                        const RFiltrationT<F>& g) {
  size_t p = f.steps(), q = g.steps();
  std::vector<std::vector<int>> d(p, std::vector<int>(q, 0));
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < q; ++j) {
      int ri = f.flags[i].m, rj = g.flags[j].m;
      d[i][j] = ri + rj - rank_of(vstack(f.flags[i], g.flags[j]));
    }
  return d;
}
}  // namespace detail

// <f,g> = sum st dim gr_f^s(gr_g^t V).
template <class F>
Rational filt_pairing(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  if (f.dim != g.dim) throw length_mismatch("filt_pairing: ambient dimension mismatch");
  auto d = detail::meet_dims(f, g);
  size_t p = f.steps(), q = g.steps();
  auto D = [&](size_t i, size_t j) -> int {
    if (i == 0 || j == 0) return 0;
    return d[i - 1][j - 1];
  };
  Rational acc(0);
  for (size_t i = 1; i <= p; ++i)
    for (size_t j = 1; j <= q; ++j) {
      int m = D(i, j) - D(i - 1, j) - D(i, j - 1) + D(i - 1, j - 1);
      if (m) acc += f.jumps[i - 1] * g.jumps[j - 1] * m;
    }
  return acc;
}

template <class F>
Rational norm2(const RFiltrationT<F>& f) {
  Rational acc(0);
  for (size_t i = 0; i < f.steps(); ++i)
    acc += f.jumps[i] * f.jumps[i] * f.graded_dim(i);
  return acc;
}

// d(f,g)^2, exact.
template <class F>
Rational dist2(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  Rational two_fg = Rational(2) * filt_pairing(f, g);
  return norm2(f) + norm2(g) - two_fg;
}

template <class F>
double distance(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  return std::sqrt(dist2(f, g).get_d());
}

// A basis splitting f and g simultaneously: rows of the result, together
// with the value vectors alpha, beta realizing f = f_alpha, g = f_beta in
// that apartment. Verified internally.
template <class F>
struct CommonBasis {
  Mat<F> basis;  // rows are basis vectors
  std::vector<Rational> alpha, beta;
};

template <class F>
RFiltrationT<F> filtration_from_basis(const Mat<F>& basis,
                                      const std::vector<Rational>& vals) {
  std::vector<Rational> sorted(vals.begin(), vals.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Rational> jumps;
  std::vector<Mat<F>> flags;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
    Mat<F> W(0, basis.n);
    for (int i = 0; i < basis.m; ++i) {
      if (vals[i] < *it) continue;
      Mat<F> r(1, basis.n);
      for (int j = 0; j < basis.n; ++j) r.at(0, j) = basis.at(i, j);
      W = vstack(W, r);
    }
    jumps.push_back(*it);
    flags.push_back(W);
  }
  return normalize_filtration<F>(basis.n, jumps, flags);
}

template <class F>
CommonBasis<F> common_basis(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  if (f.dim != g.dim) throw length_mismatch("common_basis: ambient dimension mismatch");
  int n = f.dim;
  CommonBasis<F> out;
  out.basis = Mat<F>(0, n);
  // For every pair (i,j) pick a complement of
  // (F_{i-1} /\ G_j) + (F_i /\ G_{j-1}) inside F_i /\ G_j.
  for (size_t i = 1; i <= f.steps(); ++i) {
    for (size_t j = 1; j <= g.steps(); ++j) {
      Mat<F> Fi = f.flags[i - 1];
      Mat<F> Gj = g.flags[j - 1];
      Mat<F> Fi1 = (i >= 2) ? f.flags[i - 2] : Mat<F>(0, n);
      Mat<F> Gj1 = (j >= 2) ? g.flags[j - 2] : Mat<F>(0, n);
      Mat<F> U = intersect_rowspaces(Fi, Gj);
      Mat<F> lower = row_space(vstack(intersect_rowspaces(Fi1, Gj),
                                      intersect_rowspaces(Fi, Gj1)));
      // extend basis of `lower` to U
      Mat<F> cur = lower;
      for (int r = 0; r < U.m; ++r) {
        Mat<F> v(1, n);
        for (int c = 0; c < n; ++c) v.at(0, c) = U.at(r, c);
        if (subspace_leq(v, cur)) continue;
        cur = row_space(vstack(cur, v));
        out.basis = vstack(out.basis, v);
        out.alpha.push_back(f.jumps[i - 1]);
        out.beta.push_back(g.jumps[j - 1]);
      }
    }
  }
  if (out.basis.m != n) throw error("common_basis: did not produce a basis");
  if (rank_of(out.basis) != n) throw error("common_basis: vectors dependent");
  if (!(filtration_from_basis(out.basis, out.alpha) == f) ||
      !(filtration_from_basis(out.basis, out.beta) == g))
    throw error("common_basis: split check failed");
  return out;
}

// V^a_{f+g} = sum over jump pairs with a_i + b_j >= a of V_f^{a_i} /\ V_g^{b_j}.
template <class F>
RFiltrationT<F> filt_sum(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  if (f.dim != g.dim) throw length_mismatch("filt_sum: ambient dimension mismatch");
  std::vector<Rational> cand;
  for (const auto& a : f.jumps)
    for (const auto& b : g.jumps) cand.push_back(a + b);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rational> jumps;
  std::vector<Mat<F>> flags;
  for (const auto& a : cand) {
    Mat<F> W(0, f.dim);
    for (size_t i = 0; i < f.steps(); ++i)
      for (size_t j = 0; j < g.steps(); ++j) {
        Rational s = f.jumps[i] + g.jumps[j];
        if (s < a) continue;
        W = vstack(W, intersect_rowspaces(f.flags[i], g.flags[j]));
      }
    jumps.push_back(a);
    flags.push_back(W);
  }
  return normalize_filtration<F>(f.dim, jumps, flags);
}

template <class F>
RFiltrationT<F> filt_scale(const Rational& c, const RFiltrationT<F>& f) {
  if (!(c > 0)) throw error("filt_scale: scale must be positive");
  RFiltrationT<F> out = f;
  for (auto& a : out.jumps) a *= c;
  return out;
}

template <class F>
RFiltrationT<F> filt_direct_sum(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  int n = f.dim + g.dim;
  std::vector<Rational> cand;
  for (const auto& a : f.jumps) cand.push_back(a);
  for (const auto& b : g.jumps) cand.push_back(b);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rational> jumps;
  std::vector<Mat<F>> flags;
  for (const auto& a : cand) {
    Mat<F> Wf = filtration_at(f, a), Wg = filtration_at(g, a);
    Mat<F> W(Wf.m + Wg.m, n);
    for (int i = 0; i < Wf.m; ++i)
      for (int j = 0; j < f.dim; ++j) W.at(i, j) = Wf.at(i, j);
    for (int i = 0; i < Wg.m; ++i)
      for (int j = 0; j < g.dim; ++j) W.at(Wf.m + i, f.dim + j) = Wg.at(i, j);
    jumps.push_back(a);
    flags.push_back(W);
  }
  return normalize_filtration<F>(n, jumps, flags);
}

namespace detail {
template <class F>
Mat<F> kron_rows(const Mat<F>& A, const Mat<F>& B, int na, int nb) {
  // span(A) tensor span(B) inside F^(na*nb), row-major pair indexing
  Mat<F> W(A.m * B.m, na * nb);
  for (int i = 0; i < A.m; ++i)
    for (int k = 0; k < B.m; ++k)
      for (int j = 0; j < na; ++j)
        for (int l = 0; l < nb; ++l)
          W.at(i * B.m + k, j * nb + l) = A.at(i, j) * B.at(k, l);
  return W;
}
}  // namespace detail

// V^a_{f tensor g} = sum over s+t >= a of V_f^s tensor V_g^t, with pair
// (i,j) of coordinates at index i*dim(g)+j.
template <class F>
RFiltrationT<F> filt_tensor(const RFiltrationT<F>& f, const RFiltrationT<F>& g) {
  int n = f.dim * g.dim;
  std::vector<Rational> cand;
  for (const auto& a : f.jumps)
    for (const auto& b : g.jumps) cand.push_back(a + b);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Rational> jumps;
  std::vector<Mat<F>> flags;
  for (const auto& a : cand) {
    Mat<F> W(0, n);
    for (size_t i = 0; i < f.steps(); ++i)
      for (size_t j = 0; j < g.steps(); ++j) {
        Rational s = f.jumps[i] + g.jumps[j];
        if (s < a) continue;
        W = vstack(W, detail::kron_rows(f.flags[i], g.flags[j], f.dim, g.dim));
      }
    jumps.push_back(a);
    flags.push_back(W);
  }
  return normalize_filtration<F>(n, jumps, flags);
}

// deg(f) = sum a dim gr^a.
template <class F>
Rational filt_degree(const RFiltrationT<F>& f) {
  Rational acc(0);
  for (size_t i = 0; i < f.steps(); ++i) acc += f.jumps[i] * f.graded_dim(i);
  return acc;
}

// ||f||^2 - 2 sum_a a * deg(gr^a); graded_degrees aligned with f.jumps.
template <class F>
Rational filt_energy(const RFiltrationT<F>& f,
                     const std::vector<Rational>& graded_degrees) {
  if (graded_degrees.size() != f.steps())
    throw length_mismatch("filt_energy: degree map size mismatch");
  Rational acc = norm2(f);
  for (size_t i = 0; i < f.steps(); ++i)
    acc -= Rational(2) * f.jumps[i] * graded_degrees[i];
  return acc;
}

using Filtration = RFiltrationT<Rational>;

}  // namespace hnstrata
