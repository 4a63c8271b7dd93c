#include "hnstrata/lattice.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "hnstrata/errors.hpp"

namespace hnstrata {

LatticePresentation LatticePresentation::standard(int n) {
  LatticePresentation g;
  g.n = n;
  g.mat = LMat(n, n);
  for (int i = 0; i < n; ++i) g.mat.at(i, i) = Laurent::one();
  return g;
}

LatticePresentation LatticePresentation::diagonal(const std::vector<long>& exps) {
  int n = static_cast<int>(exps.size());
  LatticePresentation g = standard(n);
  for (int i = 0; i < n; ++i)
    g.mat.at(i, i) = Laurent::monomial(Rational(1), exps[i]);
  return g;
}

namespace {

// positive gcd of all coefficients of a set of entries; 0 when all vanish
Rational entries_content(const LMat& A, int i0, int i1, int j0, int j1) {
  Rational g(0);
  for (int i = i0; i < i1; ++i)
    for (int j = j0; j < j1; ++j)
      for (const auto& c : A.at(i, j).coef) {
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        g = (g == 0) ? a : rat_gcd(g, a);
      }
  return g;
}

}  // namespace

Laurent bareiss_det(const LMat& A) {
  if (A.m != A.n) throw error("bareiss_det: not square");
  int n = A.m;
  if (n == 0) return Laurent::one();
  LMat M = A;
  // pull the rational content out of each row first; Bareiss then stays in
  // primitive integer-coefficient polynomials
  Rational scale(1);
  for (int i = 0; i < n; ++i) {
    Rational c = entries_content(M, i, i + 1, 0, n);
    if (c == 0) return Laurent::zero();
    if (c == 1) continue;
    scale *= c;
    Rational inv = Rational(1) / c;
    for (int j = 0; j < n; ++j) M.at(i, j) = scalar_mul(inv, M.at(i, j));
  }
  Laurent prev = Laurent::one();
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M.at(k, k).is_zero()) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (!M.at(i, k).is_zero()) { piv = i; break; }
      if (piv < 0) return Laurent::zero();
      for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Laurent t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
        M.at(i, j) = exact_div(t, prev);
      }
    prev = M.at(k, k);
  }
  Laurent d = scalar_mul(sign < 0 ? Rational(-scale) : scale, M.at(n - 1, n - 1));
  return d;
}

Laurent laplace_det(const LMat& A) {
  if (A.m != A.n) throw error("laplace_det: not square");
  int n = A.m;
  std::function<Laurent(std::vector<int>)> rec = [&](std::vector<int> cols) -> Laurent {
    int row = n - static_cast<int>(cols.size());
    if (cols.empty()) return Laurent::one();
    Laurent acc = Laurent::zero();
    for (size_t t = 0; t < cols.size(); ++t) {
      const Laurent& a = A.at(row, cols[t]);
      if (a.is_zero()) continue;
      std::vector<int> rest;
      for (size_t u = 0; u < cols.size(); ++u)
        if (u != t) rest.push_back(cols[u]);
      Laurent sub = rec(rest);
      Laurent term = a * sub;
      acc = (t % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<int> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = j;
  return rec(cols);
}

long det_valuation(const LMat& g) {
  Laurent d = bareiss_det(g);
  auto v = d.valuation();
  if (!v) throw singular_matrix("det_valuation: determinant vanishes");
  return *v;
}

namespace {

// entry of minimal polynomial degree (Euclid measure over Q[xi]) in the
// trailing submatrix
bool find_pivot(const LMat& A, int t, int& pi, int& pj) {
  long best = std::numeric_limits<long>::max();
  pi = pj = -1;
  for (int i = t; i < A.m; ++i)
    for (int j = t; j < A.n; ++j) {
      if (A.at(i, j).is_zero()) continue;
      long d = *A.at(i, j).degree();
      if (d < best) {
        best = d;
        pi = i;
        pj = j;
      }
    }
  return pi >= 0;
}

}  // namespace

DiagResult diagonalize(const LMat& A0, bool want_U, bool want_Uinv, bool want_Vinv) {
  DiagResult res;
  if (A0.m == 0 || A0.n == 0) return res;
  // factor a global xi power out so entries are polynomials
  long shift = std::numeric_limits<long>::max();
  for (const auto& e : A0.a)
    if (!e.is_zero()) shift = std::min(shift, *e.valuation());
  if (shift == std::numeric_limits<long>::max()) return res;  // zero matrix
  LMat A = A0;
  for (auto& e : A.a) e = shifted(e, -shift);

  LMat U, Uinv, Vinv;
  if (want_U) U = LMat::identity(A.m);
  if (want_Uinv) Uinv = LMat::identity(A.m);
  if (want_Vinv) Vinv = LMat::identity(A.n);

  auto row_axpy = [&](int dst, int src, const Laurent& f) {
    // A <- E*A with E = I + f e_dst e_src^T; U <- U*E^{-1}, Uinv <- E*Uinv
    for (int j = 0; j < A.n; ++j) A.at(dst, j) = A.at(dst, j) + f * A.at(src, j);
    if (want_U)
      for (int i = 0; i < U.m; ++i) U.at(i, src) = U.at(i, src) - f * U.at(i, dst);
    if (want_Uinv)
      for (int j = 0; j < Uinv.n; ++j)
        Uinv.at(dst, j) = Uinv.at(dst, j) + f * Uinv.at(src, j);
  };
  auto col_axpy = [&](int dst, int src, const Laurent& f) {
    // A <- A*E with E = I + f e_src e_dst^T; Vinv <- Vinv*E
    for (int i = 0; i < A.m; ++i) A.at(i, dst) = A.at(i, dst) + f * A.at(i, src);
    if (want_Vinv)
      for (int i = 0; i < Vinv.m; ++i)
        Vinv.at(i, dst) = Vinv.at(i, dst) + f * Vinv.at(i, src);
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < A.n; ++j) std::swap(A.at(a, j), A.at(b, j));
    if (want_U)
      for (int i = 0; i < U.m; ++i) std::swap(U.at(i, a), U.at(i, b));
    if (want_Uinv)
      for (int j = 0; j < Uinv.n; ++j) std::swap(Uinv.at(a, j), Uinv.at(b, j));
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < A.m; ++i) std::swap(A.at(i, a), A.at(i, b));
    if (want_Vinv)
      for (int i = 0; i < Vinv.m; ++i) std::swap(Vinv.at(i, a), Vinv.at(i, b));
  };
  // scaling a row or column by a nonzero rational is unimodular over Q[xi];
  // keeping entries primitive stops coefficient blowup during elimination
  auto scale_row = [&](int i) {
    Rational c = entries_content(A, i, i + 1, 0, A.n);
    if (c == 0 || c == 1) return;
    Rational inv = Rational(1) / c;
    for (int j = 0; j < A.n; ++j) A.at(i, j) = scalar_mul(inv, A.at(i, j));
    if (want_U)
      for (int r = 0; r < U.m; ++r) U.at(r, i) = scalar_mul(c, U.at(r, i));
    if (want_Uinv)
      for (int j = 0; j < Uinv.n; ++j) Uinv.at(i, j) = scalar_mul(inv, Uinv.at(i, j));
  };
  auto scale_col = [&](int j) {
    Rational c = entries_content(A, 0, A.m, j, j + 1);
    if (c == 0 || c == 1) return;
    Rational inv = Rational(1) / c;
    for (int i = 0; i < A.m; ++i) A.at(i, j) = scalar_mul(inv, A.at(i, j));
    if (want_Vinv)
      for (int i = 0; i < Vinv.m; ++i) Vinv.at(i, j) = scalar_mul(inv, Vinv.at(i, j));
  };

  for (int i = 0; i < A.m; ++i) scale_row(i);
  int t = 0;
  int tmax = std::min(A.m, A.n);
  while (t < tmax) {
    int pi, pj;
    if (!find_pivot(A, t, pi, pj)) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = true;
    for (int i = t + 1; i < A.m; ++i) {
      if (A.at(i, t).is_zero()) continue;
      Laurent q, r;
      poly_divmod(A.at(i, t), A.at(t, t), q, r);
      row_axpy(i, t, -q);
      scale_row(i);
      if (!r.is_zero()) clean = false;
    }
    for (int j = t + 1; j < A.n; ++j) {
      if (A.at(t, j).is_zero()) continue;
      Laurent q, r;
      poly_divmod(A.at(t, j), A.at(t, t), q, r);
      col_axpy(j, t, -q);
      scale_col(j);
      if (!r.is_zero()) clean = false;
    }
    if (!clean) continue;  // smaller-degree entries appeared; re-pivot
    ++t;
  }
  res.rank = t;
  for (int i = 0; i < t; ++i) res.diag.push_back(shifted(A.at(i, i), shift));
  if (want_U) res.U = U;
  if (want_Uinv) res.Uinv = Uinv;
  if (want_Vinv) res.Vinv = Vinv;
  return res;
}

std::vector<long> local_valuations(const LMat& A) {
  DiagResult d = diagonalize(A);
  std::vector<long> vals;
  for (const auto& e : d.diag) vals.push_back(*e.valuation());
  std::sort(vals.begin(), vals.end());
  return vals;
}

std::vector<long> local_valuations_minors(const LMat& A) {
  int m = A.m, n = A.n;
  int kmax = std::min(m, n);
  std::vector<long> vk;  // vk[k-1] = min valuation over k x k minors
  for (int k = 1; k <= kmax; ++k) {
    long best = std::numeric_limits<long>::max();
    std::vector<int> rows(k), cols(k);
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int idx, int from) {
      if (idx == k) {
        pick_cols(0, 0);
        return;
      }
      for (int i = from; i < m; ++i) {
        rows[idx] = i;
        pick_rows(idx + 1, i + 1);
      }
    };
    pick_cols = [&](int idx, int from) {
      if (idx == k) {
        LMat S(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) S.at(a, b) = A.at(rows[a], cols[b]);
        Laurent d = laplace_det(S);
        auto v = d.valuation();
        if (v) best = std::min(best, *v);
        return;
      }
      for (int j = from; j < n; ++j) {
        cols[idx] = j;
        pick_cols(idx + 1, j + 1);
      }
    };
    pick_rows(0, 0);
    if (best == std::numeric_limits<long>::max()) break;  // rank < k
    vk.push_back(best);
  }
  std::vector<long> divisors;
  for (size_t k = 0; k < vk.size(); ++k)
    divisors.push_back(vk[k] - (k ? vk[k - 1] : 0));
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

MinorValuations minor_valuations(const LMat& A) {
  if (A.m != A.n) throw error("minor_valuations: not square");
  int n = A.m;
  if (n > 12) throw error("minor_valuations: size too large");
  constexpr long kNone = std::numeric_limits<long>::max();
  MinorValuations out;
  out.row_val.assign(1u << n, kNone);
  out.row_val[0] = 0;
  out.vk = {0};

  // make entries integer-primitive per row; constant row scalings do not
  // change any minor valuation
  LMat M = A;
  for (int i = 0; i < n; ++i) {
    Rational c = entries_content(M, i, i + 1, 0, n);
    if (c == 0 || c == 1) continue;
    Rational inv = Rational(1) / c;
    for (int j = 0; j < n; ++j) M.at(i, j) = scalar_mul(inv, M.at(i, j));
  }
  long shift = 0;  // global xi power factored out so minors are polynomials
  {
    long mn = kNone;
    for (const auto& e : M.a)
      if (!e.is_zero()) mn = std::min(mn, *e.valuation());
    if (mn == kNone) return out;  // zero matrix
    shift = mn;
    for (auto& e : M.a) e = shifted(e, -mn);
  }

  std::vector<std::vector<unsigned>> combs(static_cast<size_t>(n) + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    combs[static_cast<size_t>(__builtin_popcount(mask))].push_back(mask);
  std::vector<int> comb_index(1u << n, -1);

  // level k holds det M[T, C] for |T| = |C| = k
  std::vector<Laurent> level = {Laurent::one()};
  comb_index[0] = 0;
  for (int k = 0; k < n; ++k) {
    const auto& rows_k = combs[static_cast<size_t>(k)];
    const auto& rows_k1 = combs[static_cast<size_t>(k) + 1];
    size_t w = rows_k.size();
    std::vector<Laurent> next(rows_k1.size() * rows_k1.size());
    long level_min = kNone;
    for (size_t ri = 0; ri < rows_k1.size(); ++ri) {
      unsigned T = rows_k1[ri];
      int last_row = 31 - __builtin_clz(T);
      unsigned Tsub = T & ~(1u << last_row);
      long row_min = kNone;
      for (size_t ci = 0; ci < rows_k1.size(); ++ci) {
        unsigned C = rows_k1[ci];
        Laurent acc = Laurent::zero();
        int sign = (k % 2 == 0) ? 1 : -1;  // (-1)^(k + j), j = 0 first
        for (unsigned rest = C; rest; rest &= rest - 1) {
          int c = __builtin_ctz(rest);
          const Laurent& entry = M.at(last_row, c);
          if (!entry.is_zero()) {
            const Laurent& sub =
                level[static_cast<size_t>(comb_index[Tsub]) * w +
                      static_cast<size_t>(comb_index[C & ~(1u << c)])];
            if (!sub.is_zero()) {
              Laurent term = entry * sub;
              acc = (sign > 0) ? acc + term : acc - term;
            }
          }
          sign = -sign;
        }
        next[ri * rows_k1.size() + ci] = acc;
        auto v = acc.valuation();
        if (v) {
          row_min = std::min(row_min, *v);
          level_min = std::min(level_min, *v);
        }
      }
      out.row_val[T] = row_min == kNone
                           ? kNone
                           : row_min + static_cast<long>(k + 1) * shift;
    }
    if (level_min == kNone) break;  // rank exhausted
    out.vk.push_back(level_min + static_cast<long>(k + 1) * shift);
    for (size_t i = 0; i < rows_k1.size(); ++i)
      comb_index[rows_k1[i]] = static_cast<int>(i);
    level = std::move(next);
  }
  return out;
}

std::vector<long> elementary_divisors(const LatticePresentation& g) {
  // determinantal-divisor route: d_k = v_k - v_{k-1}
  MinorValuations mv = minor_valuations(g.mat);
  if (static_cast<int>(mv.vk.size()) != g.n + 1)
    throw singular_matrix("elementary_divisors: singular presentation");
  std::vector<long> vals;
  for (int k = 1; k <= g.n; ++k)
    vals.push_back(mv.vk[static_cast<size_t>(k)] - mv.vk[static_cast<size_t>(k) - 1]);
  if (g.n <= 5) {
    std::vector<long> oracle = local_valuations(g.mat);  // elimination route
    if (oracle != vals)
      throw error("elementary_divisors: minor and elimination routes disagree");
  }
  return vals;
}

long gauge_valuation(const LatticePresentation& g, const std::vector<Laurent>& v) {
  if (static_cast<int>(v.size()) != g.n)
    throw length_mismatch("gauge_valuation: dimension mismatch");
  bool all_zero = true;
  for (const auto& e : v)
    if (!e.is_zero()) all_zero = false;
  if (all_zero) throw zero_vector("gauge_valuation: zero vector");
  // Cramer: (g^{-1} v)_i = det(g with column i replaced by v) / det(g)
  Laurent d = bareiss_det(g.mat);
  auto dv = d.valuation();
  if (!dv) throw singular_matrix("gauge_valuation: singular presentation");
  long best = std::numeric_limits<long>::max();
  for (int i = 0; i < g.n; ++i) {
    LMat M = g.mat;
    for (int r = 0; r < g.n; ++r) M.at(r, i) = v[r];
    Laurent num = bareiss_det(M);
    auto nv = num.valuation();
    if (!nv) continue;  // zero coordinate
    best = std::min(best, *nv - *dv);
  }
  if (best == std::numeric_limits<long>::max())
    throw error("gauge_valuation: inconsistent solve");
  return best;
}

bool lattice_equal(const LatticePresentation& a, const LatticePresentation& b) {
  if (a.n != b.n) return false;
  for (int j = 0; j < b.n; ++j) {
    std::vector<Laurent> col(static_cast<size_t>(b.n));
    for (int i = 0; i < b.n; ++i) col[i] = b.mat.at(i, j);
    if (gauge_valuation(a, col) < 0) return false;
  }
  for (int j = 0; j < a.n; ++j) {
    std::vector<Laurent> col(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) col[i] = a.mat.at(i, j);
    if (gauge_valuation(b, col) < 0) return false;
  }
  return true;
}

AdaptedBasis adapted_basis(const LatticePresentation& g) {
  DiagResult d = diagonalize(g.mat, /*want_U=*/true);
  if (d.rank != g.n) throw singular_matrix("adapted_basis: singular presentation");
  AdaptedBasis out;
  out.basis = *d.U;
  for (const auto& e : d.diag) out.exps.push_back(*e.valuation());
  // U is unimodular over Q[xi]: constant nonzero determinant
  Laurent du = bareiss_det(out.basis);
  if (du.is_zero() || *du.valuation() != 0 || *du.degree() != 0)
    throw error("adapted_basis: transform not unimodular");
  return out;
}

namespace {

std::vector<int> complement_of(int n, const std::vector<int>& S) {
  std::vector<bool> in(static_cast<size_t>(n), false);
  for (int i : S) {
    if (i < 0 || i >= n) throw error("coordinate subset out of range");
    in[static_cast<size_t>(i)] = true;
  }
  std::vector<int> T;
  for (int i = 0; i < n; ++i)
    if (!in[static_cast<size_t>(i)]) T.push_back(i);
  return T;
}

LMat take_rows(const LMat& A, const std::vector<int>& rows) {
  LMat B(static_cast<int>(rows.size()), A.n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < A.n; ++j) B.at(static_cast<int>(i), j) = A.at(rows[i], j);
  return B;
}

}  // namespace

LatticePresentation projection_to_coordinates(const LatticePresentation& g,
                                              const std::vector<int>& T) {
  LMat rows = take_rows(g.mat, T);
  int r = static_cast<int>(T.size());
  if (r == 0) return LatticePresentation{0, LMat(0, 0)};
  DiagResult d = diagonalize(rows, /*want_U=*/true);
  if (d.rank != r) throw singular_matrix("projection_to_coordinates: rank drop");
  // pi_T(Xi) = U * diag * O^r
  LMat gen(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) gen.at(i, j) = d.U->at(i, j) * d.diag[static_cast<size_t>(j)];
  return LatticePresentation{r, gen};
}

LatticePresentation intersection_with_coordinates(const LatticePresentation& g,
                                                  const std::vector<int>& S) {
  // Xi /\ span_S = { e supported on S : g^{-1} e integral }; with
  // B = adj(g)[:,S] = U D V this is V^{-1} diag(xi^{val det g - d_i}) O^S.
  int s = static_cast<int>(S.size());
  if (s == 0) return LatticePresentation{0, LMat(0, 0)};
  long dval = det_valuation(g.mat);
  // columns S of adj(g) via Cramer: adj(g)[i][j] = cofactor_{j,i}
  LMat B(g.n, s);
  for (int c = 0; c < s; ++c) {
    int j = S[static_cast<size_t>(c)];  // adj column index = unit vector e_j
    for (int i = 0; i < g.n; ++i) {
      // adj(g)[i][j] = (-1)^{i+j} * minor of g with row j, col i removed
      LMat M(g.n - 1, g.n - 1);
      int rr = 0;
      for (int r = 0; r < g.n; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int q = 0; q < g.n; ++q) {
          if (q == i) continue;
          M.at(rr, cc) = g.mat.at(r, q);
          ++cc;
        }
        ++rr;
      }
      Laurent m = bareiss_det(M);
      B.at(i, c) = ((i + j) % 2 == 0) ? m : -m;
    }
  }
  DiagResult d = diagonalize(B, false, false, /*want_Vinv=*/true);
  if (d.rank != s) throw singular_matrix("intersection_with_coordinates: rank drop");
  LMat gen(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      long e = dval - *d.diag[static_cast<size_t>(j)].valuation();
      gen.at(i, j) = shifted(d.Vinv->at(i, j), e);
    }
  return LatticePresentation{s, gen};
}

long intersection_divisor_sum(const LatticePresentation& g,
                              const std::vector<int>& S, long det_val) {
  std::vector<int> T = complement_of(g.n, S);
  if (T.empty()) return det_val;
  LMat rows = take_rows(g.mat, T);
  std::vector<long> vals = local_valuations(rows);
  if (static_cast<int>(vals.size()) != static_cast<int>(T.size()))
    throw singular_matrix("intersection_divisor_sum: projected rank drop");
  long quotient_sum = 0;
  for (long v : vals) quotient_sum += v;
  return det_val - quotient_sum;
}

LMat kronecker(const LMat& A, const LMat& B) {
  LMat C(A.m * B.m, A.n * B.n);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (int k = 0; k < B.m; ++k)
        for (int l = 0; l < B.n; ++l)
          C.at(i * B.m + k, j * B.n + l) = A.at(i, j) * B.at(k, l);
    }
  return C;
}

LMat matmul(const LMat& A, const LMat& B) {
  if (A.n != B.m) throw error("matmul: shape mismatch");
  LMat C(A.m, B.n);
  for (int i = 0; i < A.m; ++i)
    for (int k = 0; k < A.n; ++k) {
      if (A.at(i, k).is_zero()) continue;
      for (int j = 0; j < B.n; ++j) {
        if (B.at(k, j).is_zero()) continue;
        C.at(i, j) = C.at(i, j) + A.at(i, k) * B.at(k, j);
      }
    }
  return C;
}

LMat block_diag(const LMat& A, const LMat& B) {
  LMat C(A.m + B.m, A.n + B.n);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < A.n; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.m; ++i)
    for (int j = 0; j < B.n; ++j) C.at(A.m + i, A.n + j) = B.at(i, j);
  return C;
}

LatticePresentation dual_lattice(const LatticePresentation& g) {
  DiagResult d = diagonalize(g.mat, false, /*want_Uinv=*/true);
  if (d.rank != g.n) throw singular_matrix("dual_lattice: singular presentation");
  // Xi = U diag(xi^{e_i}) O^n  =>  Xi^* = U^{-T} diag(xi^{-e_i}) O^n
  LMat gen(g.n, g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      long e = -*d.diag[static_cast<size_t>(j)].valuation();
      gen.at(i, j) = shifted(d.Uinv->at(j, i), e);
    }
  return LatticePresentation{g.n, gen};
}

}  // namespace hnstrata
