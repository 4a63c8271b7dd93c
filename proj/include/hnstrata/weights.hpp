#pragma once

#include <vector>

#include "hnstrata/rootdata.hpp"

namespace hnstrata {

// Certified two-sided bound for S_M(mu). When exact, lower == upper.
struct SMuResult {
  std::vector<Coweight> lower;  // Sigma(mu)_{M-max}
  std::vector<Coweight> upper;  // Sigma(mu)_{M-dom}
  bool exact = false;
};

// Dominant integral nu <= mu with equal sum (candidates for lambda_dom).
std::vector<Coweight> dominant_below(const Coweight& mu);

// All M-dominant integral lambda whose dominant representative is <= mu.
std::vector<Coweight> sigma_m_dom(const Coweight& mu, const LeviComposition& M);

// The <=_M-maximal elements of sigma_m_dom (maximality within theta-fibers,
// since distinct fibers are incomparable).
std::vector<Coweight> sigma_m_max(const Coweight& mu, const LeviComposition& M);

// Exact when mu is minuscule or M = T (bounds collapse) or M = G (Cartan
// uniqueness forces {mu}); otherwise the certified interval.
SMuResult s_m_mu(const Coweight& mu, const LeviComposition& M);

// Weyl-orbit members of mu that are M-dominant. Always exact.
std::vector<Coweight> s_m_mu_cl(const Coweight& mu, const LeviComposition& M);

// Per-block sums of an integral coweight.
std::vector<long> theta(const Coweight& lambda, const LeviComposition& M);

}  // namespace hnstrata
