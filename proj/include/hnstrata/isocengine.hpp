#pragma once

#include <vector>

#include "hnstrata/filtspace.hpp"
#include "hnstrata/kottwitz.hpp"
#include "hnstrata/lattice.hpp"

namespace hnstrata {

// Slope-diagonal isocrystal with a lattice carrying the gauge norm.
// dim(D) = sum of slopes; with pairwise distinct slopes every subisocrystal
// is a coordinate-subset span, which keeps the subobject lattice finite.
struct NormedIsocrystal {
  std::vector<long> slopes;
  LatticePresentation lattice;

  int rank() const { return static_cast<int>(slopes.size()); }
  long dim() const;  // sum of slopes
  bool slopes_distinct() const;
};

struct FilteredIsocrystal {
  std::vector<long> slopes;
  Filtration filtration;  // integer jumps on k^n

  int rank() const { return static_cast<int>(slopes.size()); }
  long dim() const;
};

// mu = negated elementary divisors sorted decreasing (Xi = x mu(xi)^{-1} Xi0).
Coweight relative_position(const LatticePresentation& g);

// deg of the strict subobject on coordinates S:
// -(sum of elementary divisors of Xi /\ span_S) - sum of slopes over S.
long sub_degree(const NormedIsocrystal& D, const std::vector<int>& S);

// deg(D, Xi) of the whole object.
long total_degree(const NormedIsocrystal& D);

// nu(alpha_{Xi1}, alpha_{Xi2}), computed by two independent routes
// (elimination pivots of a common adapted basis vs determinant valuations)
// and asserted equal.
long nu_distance(const LatticePresentation& a, const LatticePresentation& b);

// Harder-Narasimhan data: the chain of coordinate subsets growing to the
// full set, graded slopes/degrees/ranks, and the slope vector v.
struct HNResult {
  std::vector<std::vector<int>> chain;  // strictly increasing subsets, 0-based
  std::vector<Rational> graded_slopes;  // strictly decreasing
  std::vector<long> graded_degrees;
  std::vector<int> graded_ranks;
  Coweight v;  // graded slopes with multiplicity, weakly decreasing

  Filtration as_filtration(int n) const;
};

// Greedy maximal-destabilizing construction over coordinate subsets; ties
// in slope break toward larger cardinality and the chosen subset must be
// unique. Throws repeated_slopes unless slopes are pairwise distinct.
HNResult hn_filtration(const NormedIsocrystal& D);

// Degrees of all coordinate subsets as a bitmask-indexed table
// (table[0] = 0); the raw material of hn_filtration and the energy tests.
std::vector<long> degree_table(const NormedIsocrystal& D);

// The greedy HN chain read off a precomputed degree table.
HNResult hn_from_degree_table(int n, const std::vector<long>& deg);

// HN(b, x) in B(G): nu = -w0 v, kappa = kappa(b) - mu_sharp.
IsocrystalClass hn_class(const NormedIsocrystal& D);

NormedIsocrystal tensor(const NormedIsocrystal& a, const NormedIsocrystal& b);
NormedIsocrystal direct_sum(const NormedIsocrystal& a, const NormedIsocrystal& b);
NormedIsocrystal dual(const NormedIsocrystal& a);

// Quotient data by the subobject on coordinates S: complement slopes with
// the projected lattice.
NormedIsocrystal quotient(const NormedIsocrystal& D, const std::vector<int>& S);

// F^i = ((xi^i Xi) /\ Xi0 + xi Xi0) / xi Xi0 on k^n; the jump multiset
// equals relative_position(Xi) (asserted).
Filtration residue_filtration(const LatticePresentation& g);

// Same greedy HN with sub-degrees read from the filtration instead of the
// lattice.
HNResult filtered_hn(const FilteredIsocrystal& D);
long filtered_sub_degree(const FilteredIsocrystal& D, const std::vector<int>& S);

IsocrystalClass filtered_hn_class(const FilteredIsocrystal& D, long kappa_b,
                                  const Coweight& mu);

// The residue-filtration companion of a lattice instance.
FilteredIsocrystal bb_image(const NormedIsocrystal& D);

// Xi = x * diag(xi^{-mu_i}) * Xi0 for constant invertible x.
LatticePresentation classical_lattice(const QMat& x, const Coweight& mu);

}  // namespace hnstrata
