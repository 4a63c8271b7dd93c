#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnstrata/kottwitz.hpp"
#include "hnstrata/weights.hpp"

namespace hnstrata {

enum class Verdict { yes, no, unknown };
std::string verdict_to_string(Verdict v);

struct Witness {
  IsocrystalClass b_M;
  Coweight lambda;
  bool certified = false;  // lambda lies in the certified lower set
};

struct StratumRecord {
  IsocrystalClass b_prime;   // G-class indexing the stratum
  LeviComposition levi;      // constancy runs of w0 nu_{b'}
  std::vector<Witness> witnesses;
  Verdict nonempty = Verdict::unknown;
  bool classical = false;
  std::optional<long> dimension;  // minuscule mu only
};

// Weakly admissible (= semistable) locus non-emptiness: the trace-centered
// mu dominates the trace-centered nu_b.
bool wa_nonempty(const Coweight& mu, const IsocrystalClass& b);

// Reduction b'_M of b' to the centralizer M of w0 nu_{b'}:
// nu_{b'_M} = w0 nu_{b'}, blocks the constancy runs.
struct StratumFrame {
  LeviComposition M;
  Coweight nu_bprime_M;            // = w0 nu_{b'}
  std::vector<long> kappa_bprime_M;
};
StratumFrame stratum_frame(const IsocrystalClass& b_prime);

// Non-emptiness of the stratum indexed by b'. "yes" needs a witness with
// lambda in the certified lower set of S_M(mu); "no" needs failure across
// the whole upper set; otherwise "unknown". A kappa mismatch
// kappa(b') != kappa(b) - sum(mu) is an immediate "no".
Verdict stratum_nonempty(const Coweight& mu, const IsocrystalClass& b,
                         const IsocrystalClass& b_prime,
                         std::vector<Witness>* witnesses_out = nullptr);

// Same criterion quantified over S_M(mu)_cl (always exact).
bool has_classical_points(const Coweight& mu, const IsocrystalClass& b,
                          const IsocrystalClass& b_prime);

// <mu - lambda, rho>.
Rational fiber_dim(const Coweight& mu, const Coweight& lambda,
                   const LeviComposition& M);

// dim = <mu, rho> + max over S_{mu,b,b'} of <lambda, 2 rho_M - rho>,
// cross-evaluated against max over the opposed set of <mu + lambda', rho>.
// Throws not_minuscule / empty_stratum.
long stratum_dim(const Coweight& mu, const IsocrystalClass& b,
                 const IsocrystalClass& b_prime);

// All candidate strata for (mu, b): triple loop over Levis, reductions and
// S_M(mu) members, filtered by Q-regularity and blockwise weak
// admissibility, deduplicated by (nu, kappa) and sorted lexicographically
// by nu_{b'}.
std::vector<StratumRecord> enumerate_strata(const Coweight& mu,
                                            const IsocrystalClass& b);

}  // namespace hnstrata
