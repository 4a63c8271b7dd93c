#pragma once

#include <vector>

#include "hnstrata/rootdata.hpp"

namespace hnstrata {

// An element of B(M) for a standard Levi M of GL_n, stored as its Newton
// point (per-block dominant slope vectors) together with the per-block
// Kottwitz invariants. For GL factors kappa is the block slope sum.
struct IsocrystalClass {
  LeviComposition levi;
  std::vector<std::vector<Rational>> slopes;  // per block, weakly decreasing
  std::vector<long> kappa;                    // per block, derived

  // Concatenated Newton vector.
  Coweight newton() const;
  long kappa_total() const;
  bool basic() const;
  int rank() const { return levi.rank(); }

  bool operator==(const IsocrystalClass& o) const {
    return levi == o.levi && slopes == o.slopes;
  }
  bool operator<(const IsocrystalClass& o) const;
};

// Validates polygon integrality per block (for each slope p/q in lowest
// terms, q divides its multiplicity in the block) and derives kappa.
// Throws integrality_error.
IsocrystalClass make_class(const LeviComposition& M,
                           const std::vector<std::vector<Rational>>& slopes);

// Basic class of GL_n with slope s repeated n times (n*s must be integral).
IsocrystalClass basic_class(int n, const Rational& s);

// [b] in B(M, eps, delta): kappa = eps blockwise and nu <=_M delta.
bool in_kottwitz_set(const IsocrystalClass& c, const std::vector<long>& eps,
                     const Coweight& delta);

// All splittings of a G-class's slope multiset into M's blocks with every
// block polygon-integral. Mapping any result back to G recovers c.
std::vector<IsocrystalClass> levi_reductions(const IsocrystalClass& c,
                                             const LeviComposition& M);

// The induced class over the full group (sorted multiset union).
IsocrystalClass induce_to_group(const IsocrystalClass& c);

// nu -> -w0 nu (reverse-negate over the ambient group; the block
// composition reverses), kappa -> -kappa.
IsocrystalClass dual_class(const IsocrystalClass& c);

// The HN index: the unique G-class with nu = -w0 v and
// kappa = kappa_b - sum(mu). Throws inconsistent_kappa when
// -sum(v) != kappa_b - sum(mu).
IsocrystalClass hn_index(const Coweight& v, long kappa_b, const Coweight& mu);

// Slope vector of the associated bundle: -Av_M(nu) blockwise.
Coweight bundle_slope(const IsocrystalClass& c);

// All G-classes (n = rank) with kappa = eps and nu <= delta; Newton slope
// denominators divide their run multiplicities, so the set is finite.
std::vector<IsocrystalClass> enumerate_kottwitz_set(int n, long eps,
                                                    const Coweight& delta);

// All valid Newton points of GL_n with entries in [lo, hi] (dominance +
// polygon integrality), as G-classes. For exhaustive test grids.
std::vector<IsocrystalClass> enumerate_newton_points(int n, const Rational& lo,
                                                     const Rational& hi);

}  // namespace hnstrata
