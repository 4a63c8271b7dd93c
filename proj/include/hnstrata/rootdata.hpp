#pragma once

#include <string>
#include <vector>

#include "hnstrata/rational.hpp"

namespace hnstrata {

// A vector in X_*(T)_Q for the diagonal torus of GL_n, in coordinates.
using Coweight = std::vector<Rational>;

// Standard Levi of GL_n: an ordered composition of n. One block is the
// full group, all blocks of size 1 the diagonal torus.
struct LeviComposition {
  std::vector<int> blocks;

  LeviComposition() = default;
  explicit LeviComposition(std::vector<int> b);

  int rank() const;
  size_t num_blocks() const { return blocks.size(); }
  bool is_group() const { return blocks.size() == 1; }
  bool is_torus() const;
  // Half-open [begin, end) coordinate range of each block.
  std::vector<std::pair<int, int>> ranges() const;

  static LeviComposition group(int n) { return LeviComposition({n}); }
  static LeviComposition torus(int n);

  bool operator==(const LeviComposition& o) const { return blocks == o.blocks; }
  std::string to_string() const;
};

// All LeviCompositions of n (2^(n-1) of them), lexicographic.
std::vector<LeviComposition> all_compositions(int n);

bool is_dominant(const Coweight& v);
bool is_m_dominant(const Coweight& v, const LeviComposition& M);
bool is_integral(const Coweight& v);
Rational sum_of(const Coweight& v);

// v <=_M w: block sums agree and within every block all partial sums of
// w - v are nonnegative (type-A coroot cone of M). M = G gives the usual
// dominance order on equal-sum vectors.
bool dominance_leq(const Coweight& v, const Coweight& w, const LeviComposition& M);

// All distinct permutations of lambda.
std::vector<Coweight> weyl_orbit(const Coweight& lambda);

// Replace every entry by its block mean; the result is central in M.
Coweight av_levi(const LeviComposition& M, const Coweight& v);

// rho_M: concatenation over blocks of ((m-1)/2, (m-3)/2, ..., -(m-1)/2).
Coweight half_sum(const LeviComposition& M, int n);

Rational pairing(const Coweight& v, const Coweight& chi);

// v -> -w0 v: reverse and negate. Preserves dominance.
Coweight minus_w0(const Coweight& v);

Coweight add(const Coweight& a, const Coweight& b);
Coweight sub(const Coweight& a, const Coweight& b);

// Entries all in {a, a+1} for some integer a.
bool is_minuscule(const Coweight& mu);

}  // namespace hnstrata
