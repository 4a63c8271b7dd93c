#pragma once

#include <cassert>
#include <vector>

#include "hnstrata/errors.hpp"
#include "hnstrata/rational.hpp"

namespace hnstrata {

// Dense row-major matrix over an exact field F. F needs +,-,*,/, ==,
// default construction to 0 and construction from int.
template <class F>
struct Mat {
  int m = 0, n = 0;
  std::vector<F> a;

  Mat() = default;
  Mat(int m_, int n_) : m(m_), n(n_), a(static_cast<size_t>(m_) * n_, F(0)) {}

  F& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const F& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static Mat identity(int k) {
    Mat I(k, k);
    for (int i = 0; i < k; ++i) I.at(i, i) = F(1);
    return I;
  }

  bool operator==(const Mat& o) const { return m == o.m && n == o.n && a == o.a; }
};

// In-place reduced row echelon form; returns the rank.
template <class F>
int rref_inplace(Mat<F>& A) {
  int rank = 0;
  for (int col = 0; col < A.n && rank < A.m; ++col) {
    int piv = -1;
    for (int i = rank; i < A.m; ++i)
      if (!(A.at(i, col) == F(0))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < A.n; ++j) std::swap(A.at(piv, j), A.at(rank, j));
    F inv = F(1) / A.at(rank, col);
    for (int j = col; j < A.n; ++j) A.at(rank, j) = A.at(rank, j) * inv;
    for (int i = 0; i < A.m; ++i) {
      if (i == rank) continue;
      F f = A.at(i, col);
      if (f == F(0)) continue;
      for (int j = col; j < A.n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Canonical basis of the row space: rref with zero rows dropped. Two
// subspaces are equal iff their row_space matrices are equal.
template <class F>
Mat<F> row_space(Mat<F> A) {
  int r = rref_inplace(A);
  Mat<F> B(r, A.n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < A.n; ++j) B.at(i, j) = A.at(i, j);
  return B;
}

template <class F>
Mat<F> vstack(const Mat<F>& A, const Mat<F>& B) {
  assert(A.n == B.n || A.m == 0 || B.m == 0);
  int n = A.m ? A.n : B.n;
  Mat<F> C(A.m + B.m, n);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < n; ++j) C.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.m; ++i)
    for (int j = 0; j < n; ++j) C.at(A.m + i, j) = B.at(i, j);
  return C;
}

template <class F>
int rank_of(Mat<F> A) {
  return rref_inplace(A);
}

template <class F>
bool subspace_leq(const Mat<F>& A, const Mat<F>& B) {
  return rank_of(vstack(B, A)) == rank_of(B);
}

// Zassenhaus: row-reduce [A A; B 0]; rows with zero left half carry the
// intersection in the right half.
template <class F>
Mat<F> intersect_rowspaces(const Mat<F>& A, const Mat<F>& B) {
  int n = A.m ? A.n : B.n;
  Mat<F> Z(A.m + B.m, 2 * n);
  for (int i = 0; i < A.m; ++i)
    for (int j = 0; j < n; ++j) Z.at(i, j) = Z.at(i, n + j) = A.at(i, j);
  for (int i = 0; i < B.m; ++i)
    for (int j = 0; j < n; ++j) Z.at(A.m + i, j) = B.at(i, j);
  rref_inplace(Z);
  Mat<F> out(0, n);
  std::vector<F> row(n);
  for (int i = 0; i < Z.m; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (!(Z.at(i, j) == F(0))) left_zero = false;
    if (!left_zero) continue;
    bool right_zero = true;
    for (int j = 0; j < n; ++j) {
      row[j] = Z.at(i, n + j);
      if (!(row[j] == F(0))) right_zero = false;
    }
    if (right_zero) continue;
    Mat<F> r(1, n);
    for (int j = 0; j < n; ++j) r.at(0, j) = row[j];
    out = vstack(out, r);
  }
  return row_space(out);
}

// Right kernel of A, returned with kernel vectors as rows.
template <class F>
Mat<F> kernel_basis(Mat<F> A) {
  int n = A.n;
  rref_inplace(A);
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < A.m; ++i) {
    int j = 0;
    while (j < n && A.at(i, j) == F(0)) ++j;
    if (j == n) break;
    pivot_col_of_row.push_back(j);
    is_pivot[j] = true;
  }
  Mat<F> K(0, n);
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Mat<F> v(1, n);
    v.at(0, free) = F(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
      v.at(0, pivot_col_of_row[r]) = F(0) - A.at(static_cast<int>(r), free);
    K = vstack(K, v);
  }
  return K;
}

template <class F>
F det(Mat<F> A) {
  assert(A.m == A.n);
  F d(1);
  for (int col = 0; col < A.n; ++col) {
    int piv = -1;
    for (int i = col; i < A.m; ++i)
      if (!(A.at(i, col) == F(0))) { piv = i; break; }
    if (piv < 0) return F(0);
    if (piv != col) {
      for (int j = 0; j < A.n; ++j) std::swap(A.at(piv, j), A.at(col, j));
      d = F(0) - d;
    }
    d = d * A.at(col, col);
    F inv = F(1) / A.at(col, col);
    for (int i = col + 1; i < A.m; ++i) {
      F f = A.at(i, col) * inv;
      if (f == F(0)) continue;
      for (int j = col; j < A.n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(col, j);
    }
  }
  return d;
}

using QMat = Mat<Rational>;

}  // namespace hnstrata
