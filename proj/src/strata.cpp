#include "hnstrata/strata.hpp"

#include <algorithm>
#include <map>

#include "hnstrata/errors.hpp"

namespace hnstrata {

std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    default: return "unknown";
  }
}

bool wa_nonempty(const Coweight& mu, const IsocrystalClass& b) {
  Coweight nu = b.newton();
  if (mu.size() != nu.size()) throw length_mismatch("wa_nonempty: rank mismatch");
  int n = static_cast<int>(mu.size());
  if (n == 0) return true;
  Rational mu_mean = sum_of(mu) / n;
  Rational nu_mean = sum_of(nu) / n;
  Rational partial(0);
  for (int i = 0; i < n; ++i) {
    partial += (mu[i] - mu_mean) - (nu[i] - nu_mean);
    if (partial < 0) return false;
  }
  return true;
}

StratumFrame stratum_frame(const IsocrystalClass& b_prime) {
  StratumFrame fr;
  Coweight nu = b_prime.newton();
  fr.nu_bprime_M = Coweight(nu.rbegin(), nu.rend());  // w0 nu_{b'}
  // constancy runs of w0 nu_{b'}
  std::vector<int> blocks;
  const Coweight& w = fr.nu_bprime_M;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    blocks.push_back(static_cast<int>(j - i));
    i = j;
  }
  fr.M = LeviComposition(blocks);
  for (auto [b, e] : fr.M.ranges()) {
    Rational s(0);
    for (int k = b; k < e; ++k) s += w[k];
    if (!is_integer(s))
      throw integrality_error("stratum_frame: non-integral block sum for b'_M");
    fr.kappa_bprime_M.push_back(to_long(s));
  }
  return fr;
}

namespace {

// kappa_M(b_M) = theta(lambda) + kappa_M(b'_M) and nu_{b_M} <=_M lambda + nu_{b'_M}
bool lambda_witnesses(const Coweight& lambda, const IsocrystalClass& b_M,
                      const StratumFrame& fr) {
  std::vector<long> want = theta(lambda, fr.M);
  for (size_t i = 0; i < want.size(); ++i) want[i] += fr.kappa_bprime_M[i];
  if (b_M.kappa != want) return false;
  Coweight bound = add(lambda, fr.nu_bprime_M);
  return dominance_leq(b_M.newton(), bound, fr.M);
}

long check_kappa(const Coweight& mu, const IsocrystalClass& b,
                 const IsocrystalClass& b_prime) {
  if (static_cast<int>(mu.size()) != b.rank() || b.rank() != b_prime.rank())
    throw kappa_mismatch("stratum: rank mismatch between mu, b, b'");
  Rational mu_sum = sum_of(mu);
  if (!is_integer(mu_sum)) throw error("stratum: mu not integral");
  return b.kappa_total() - to_long(mu_sum);
}

}  // namespace

Verdict stratum_nonempty(const Coweight& mu, const IsocrystalClass& b,
                         const IsocrystalClass& b_prime,
                         std::vector<Witness>* witnesses_out) {
  long kappa_expected = check_kappa(mu, b, b_prime);
  if (b_prime.kappa_total() != kappa_expected) return Verdict::no;
  StratumFrame fr = stratum_frame(b_prime);
  SMuResult sm = s_m_mu(mu, fr.M);
  std::vector<IsocrystalClass> reds = levi_reductions(b, fr.M);
  bool certified = false;
  for (const auto& lam : sm.lower)
    for (const auto& bm : reds)
      if (lambda_witnesses(lam, bm, fr)) {
        certified = true;
        if (witnesses_out) witnesses_out->push_back({bm, lam, true});
      }
  if (certified) return Verdict::yes;
  if (sm.exact) return Verdict::no;
  bool possible = false;
  for (const auto& lam : sm.upper)
    for (const auto& bm : reds)
      if (lambda_witnesses(lam, bm, fr)) {
        possible = true;
        if (witnesses_out) witnesses_out->push_back({bm, lam, false});
      }
  return possible ? Verdict::unknown : Verdict::no;
}

bool has_classical_points(const Coweight& mu, const IsocrystalClass& b,
                          const IsocrystalClass& b_prime) {
  long kappa_expected = check_kappa(mu, b, b_prime);
  if (b_prime.kappa_total() != kappa_expected) return false;
  StratumFrame fr = stratum_frame(b_prime);
  std::vector<IsocrystalClass> reds = levi_reductions(b, fr.M);
  for (const auto& lam : s_m_mu_cl(mu, fr.M))
    for (const auto& bm : reds)
      if (lambda_witnesses(lam, bm, fr)) return true;
  return false;
}

Rational fiber_dim(const Coweight& mu, const Coweight& lambda,
                   const LeviComposition& M) {
  if (!is_m_dominant(lambda, M)) throw error("fiber_dim: lambda not M-dominant");
  if (sum_of(mu) != sum_of(lambda)) throw error("fiber_dim: sum mismatch");
  int n = static_cast<int>(mu.size());
  return pairing(sub(mu, lambda), half_sum(LeviComposition::group(n), n));
}

long stratum_dim(const Coweight& mu, const IsocrystalClass& b,
                 const IsocrystalClass& b_prime) {
  if (!is_minuscule(mu)) throw not_minuscule("stratum_dim: mu not minuscule");
  long kappa_expected = check_kappa(mu, b, b_prime);
  if (b_prime.kappa_total() != kappa_expected)
    throw empty_stratum("stratum_dim: kappa mismatch makes the stratum empty");
  StratumFrame fr = stratum_frame(b_prime);
  SMuResult sm = s_m_mu(mu, fr.M);
  if (!sm.exact) throw error("stratum_dim: S_M(mu) not certified exact");
  std::vector<IsocrystalClass> reds = levi_reductions(b, fr.M);
  int n = static_cast<int>(mu.size());
  Coweight rho = half_sum(LeviComposition::group(n), n);
  Coweight rho_M = half_sum(fr.M, n);
  Coweight two_rho_M_minus_rho(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    two_rho_M_minus_rho[static_cast<size_t>(i)] = Rational(2) * rho_M[static_cast<size_t>(i)] - rho[static_cast<size_t>(i)];

  bool any = false;
  Rational best(0), best_op(0);
  for (const auto& lam : sm.lower) {
    bool witnessed = false;
    for (const auto& bm : reds)
      if (lambda_witnesses(lam, bm, fr)) { witnessed = true; break; }
    if (!witnessed) continue;
    Rational val = pairing(mu, rho) + pairing(lam, two_rho_M_minus_rho);
    // opposed form: lambda' = -w_{M,0} lambda, blockwise reverse-negate
    Coweight lam_op(lam.size());
    for (auto [bgn, end] : fr.M.ranges())
      for (int i = bgn; i < end; ++i)
        lam_op[static_cast<size_t>(i)] = -lam[static_cast<size_t>(bgn + end - 1 - i)];
    Rational val_op = pairing(add(mu, lam_op), rho);
    if (val != val_op) throw error("stratum_dim: the two dimension forms disagree");
    if (!any || best < val) best = val;
    if (!any || best_op < val_op) best_op = val_op;
    any = true;
  }
  if (!any) throw empty_stratum("stratum_dim: no witnessing lambda");
  if (best != best_op) throw error("stratum_dim: the two dimension forms disagree");
  if (!is_integer(best)) throw error("stratum_dim: non-integral dimension");
  return to_long(best);
}

std::vector<StratumRecord> enumerate_strata(const Coweight& mu,
                                            const IsocrystalClass& b) {
  if (!is_dominant(mu) || !is_integral(mu))
    throw error("enumerate_strata: mu must be dominant integral");
  if (static_cast<int>(mu.size()) != b.rank())
    throw length_mismatch("enumerate_strata: rank mismatch");
  if (!b.levi.is_group()) throw error("enumerate_strata: b must be a G-class");
  int n = b.rank();
  long kappa_prime = b.kappa_total() - to_long(sum_of(mu));

  // candidate nu_{b'} keyed by Newton vector
  std::map<Coweight, std::vector<Witness>> found;
  for (const auto& M : all_compositions(n)) {
    std::vector<IsocrystalClass> reds = levi_reductions(b, M);
    if (reds.empty()) continue;
    SMuResult sm = s_m_mu(mu, M);
    auto ranges = M.ranges();
    for (const auto& bm : reds) {
      Coweight nu_bm = bm.newton();
      Coweight av_nu = av_levi(M, nu_bm);
      auto consider = [&](const Coweight& lam, bool certified) {
        Coweight v = sub(av_levi(M, lam), av_nu);
        // dominant Q-regular: strictly decreasing across block boundaries
        for (size_t t = 1; t < ranges.size(); ++t)
          if (!(v[static_cast<size_t>(ranges[t].first)] <
                v[static_cast<size_t>(ranges[t - 1].first)]))
            return;
        // blockwise weak admissibility of (lambda, b_M)
        for (auto [bgn, end] : ranges) {
          Coweight mu_blk(lam.begin() + bgn, lam.begin() + end);
          std::vector<Rational> nu_blk(nu_bm.begin() + bgn, nu_bm.begin() + end);
          IsocrystalClass blk =
              make_class(LeviComposition::group(end - bgn), {nu_blk});
          if (!wa_nonempty(mu_blk, blk)) return;
        }
        Coweight nu_prime = minus_w0(v);
        found[nu_prime].push_back({bm, lam, certified});
      };
      for (const auto& lam : sm.lower) consider(lam, true);
      if (!sm.exact)
        for (const auto& lam : sm.upper) {
          bool in_lower =
              std::find(sm.lower.begin(), sm.lower.end(), lam) != sm.lower.end();
          if (!in_lower) consider(lam, false);
        }
    }
  }

  std::vector<StratumRecord> out;
  for (auto& [nu_prime, wits] : found) {
    StratumRecord rec;
    rec.b_prime = make_class(LeviComposition::group(n),
                             {std::vector<Rational>(nu_prime.begin(), nu_prime.end())});
    if (rec.b_prime.kappa_total() != kappa_prime)
      throw error("enumerate_strata: kappa bookkeeping broken");
    rec.levi = stratum_frame(rec.b_prime).M;
    bool certified = false;
    for (const auto& w : wits) certified = certified || w.certified;
    rec.nonempty = certified ? Verdict::yes : Verdict::unknown;
    for (const auto& w : wits)
      if (w.certified == certified) rec.witnesses.push_back(w);
    rec.classical = has_classical_points(mu, b, rec.b_prime);
    if (is_minuscule(mu) && rec.nonempty == Verdict::yes)
      rec.dimension = stratum_dim(mu, b, rec.b_prime);
    out.push_back(std::move(rec));
  }
  // found is a std::map over Coweight: already lexicographic in nu_{b'}
  return out;
}

}  // namespace hnstrata
