#pragma once

#include <optional>
#include <vector>

#include "hnstrata/laurent.hpp"
#include "hnstrata/linalg.hpp"

namespace hnstrata {

using LMat = Mat<Laurent>;

// A lattice Xi = g * k[[xi]]^n inside k((xi))^n, presented by an invertible
// Laurent-polynomial matrix whose columns generate it. Two presentations
// give the same lattice iff they differ by right multiplication by a matrix
// invertible over k[[xi]]; all invariants below only depend on the lattice.
struct LatticePresentation {
  int n = 0;
  LMat mat;

  static LatticePresentation standard(int n);
  static LatticePresentation diagonal(const std::vector<long>& exps);
};

// Determinant by fraction-free Bareiss elimination (exact divisions).
Laurent bareiss_det(const LMat& A);

// Determinant by Laplace expansion; independent slow route for tests.
Laurent laplace_det(const LMat& A);

// xi-adic valuation of det(g); throws singular_matrix on det = 0.
long det_valuation(const LMat& g);

// Diagonalization over Q[xi] by elementary row/column operations:
// A = U * D * V with U, V unimodular and D diagonal (no divisibility
// normalization; the xi-adic valuations of the diagonal are the local
// elementary divisors up to sorting). Only the requested transforms are
// accumulated.
struct DiagResult {
  std::vector<Laurent> diag;  // nonzero diagonal entries, in pivot order
  int rank = 0;
  std::optional<LMat> U;      // A = U D V
  std::optional<LMat> Uinv;
  std::optional<LMat> Vinv;   // for solving D V x in O^m style conditions
};
DiagResult diagonalize(const LMat& A, bool want_U = false, bool want_Uinv = false,
                       bool want_Vinv = false);

// Sorted xi-adic valuations of the local elementary divisors of A
// (a matrix over k[[xi]] up to global xi-shift). Size = rank of A.
std::vector<long> local_valuations(const LMat& A);

// Oracle route: v_k = min valuation over all k x k minors, d_k = v_k - v_{k-1}.
// Exponential in size; used to cross-check local_valuations.
std::vector<long> local_valuations_minors(const LMat& A);

// Valuations of all minors of a square matrix, by one shared Laplace
// recursion over exterior powers. row_val[T] is the minimal valuation over
// column subsets C of det A[T, C] (LONG_MAX when they all vanish), i.e. the
// total divisor valuation of the row-T sublattice; vk[k] is the k-th
// determinantal-divisor valuation. Feasible up to n ~ 10.
struct MinorValuations {
  std::vector<long> row_val;  // indexed by row bitmask; row_val[0] = 0
  std::vector<long> vk;       // vk[k] for k = 0..rank
};
MinorValuations minor_valuations(const LMat& A);

// Elementary divisors of the full-rank square lattice presentation,
// weakly increasing. Fast elimination path, cross-checked against the
// determinantal-minor oracle for n <= 5. Throws singular_matrix.
std::vector<long> elementary_divisors(const LatticePresentation& g);

// Greatest t with v in xi^t * Xi; throws zero_vector on v = 0.
long gauge_valuation(const LatticePresentation& g, const std::vector<Laurent>& v);

// Mutual-membership test for equality of lattices.
bool lattice_equal(const LatticePresentation& a, const LatticePresentation& b);

// An adapted basis: columns b_i (unimodular polynomial matrix, so also an
// O-basis of the standard lattice) and exponents e_i with
// Xi = direct sum of xi^{e_i} O b_i.
struct AdaptedBasis {
  LMat basis;               // n x n, det in Q^*
  std::vector<long> exps;   // aligned with columns
};
AdaptedBasis adapted_basis(const LatticePresentation& g);

// Xi /\ (span of coordinates S tensor K), presented inside the |S|
// coordinates. S is a sorted 0-based coordinate subset.
LatticePresentation intersection_with_coordinates(const LatticePresentation& g,
                                                  const std::vector<int>& S);

// Image of Xi under projection to coordinates T (complement quotient).
LatticePresentation projection_to_coordinates(const LatticePresentation& g,
                                              const std::vector<int>& T);

// Sum of the elementary divisors of Xi /\ span_S, computed through the
// complement rows (maximal-minor duality); fast path for degree tables.
long intersection_divisor_sum(const LatticePresentation& g,
                              const std::vector<int>& S, long det_val);

LMat kronecker(const LMat& A, const LMat& B);
LMat block_diag(const LMat& A, const LMat& B);
LMat matmul(const LMat& A, const LMat& B);

// Presentation of the dual lattice {y : <y, Xi> in O}; elementary divisors
// are the negated-reversed ones of Xi.
LatticePresentation dual_lattice(const LatticePresentation& g);

}  // namespace hnstrata
