#include "hnstrata/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "hnstrata/parallel.hpp"

namespace hnstrata {

json SuiteResult::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["cases"] = cases;
  j["failures"] = failures;
  j["ok"] = ok();
  j["details"] = details;
  return j;
}

uint64_t Rng::next() {
  // splitmix64
  state += 0x9e3779b97f4a7c15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw error("Rng::uniform: empty range");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

bool Rng::coin(double p) { return next() < static_cast<uint64_t>(p * 18446744073709551615.0); }

uint64_t suite_case_seed(uint64_t suite_seed, size_t index) {
  return suite_seed ^ (0x9e3779b97f4a7c15ull * (static_cast<uint64_t>(index) + 1));
}

namespace {

Laurent random_laurent(Rng& rng, long emin, long emax, int max_terms) {
  Laurent acc = Laurent::zero();
  int terms = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < terms; ++t) {
    long c = rng.uniform(-3, 3);
    if (c == 0) c = 1;
    acc = acc + Laurent::monomial(Rational(static_cast<int>(c)), rng.uniform(emin, emax));
  }
  return acc;
}

// Invertible by construction: P1 (I+L) diag(xi^k) (I+U) P2, unit-triangular
// factors with sparse Laurent entries.
LatticePresentation random_lattice(Rng& rng, int n, long kmin, long kmax,
                                   long emin, long emax) {
  LMat L = LMat::identity(n), U = LMat::identity(n), D(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j && rng.coin(0.5)) L.at(i, j) = random_laurent(rng, emin, emax, 2);
      if (i < j && rng.coin(0.5)) U.at(i, j) = random_laurent(rng, emin, emax, 2);
    }
  for (int i = 0; i < n; ++i)
    D.at(i, i) = Laurent::monomial(Rational(1), rng.uniform(kmin, kmax));
  LMat M = matmul(matmul(L, D), U);
  // random row/column permutations
  for (int pass = 0; pass < 2; ++pass) {
    int a = static_cast<int>(rng.uniform(0, n - 1));
    int b = static_cast<int>(rng.uniform(0, n - 1));
    for (int j = 0; j < n; ++j) std::swap(M.at(a, j), M.at(b, j));
    int c = static_cast<int>(rng.uniform(0, n - 1));
    int d = static_cast<int>(rng.uniform(0, n - 1));
    for (int i = 0; i < n; ++i) std::swap(M.at(i, c), M.at(i, d));
  }
  return LatticePresentation{n, M};
}

std::vector<long> random_distinct(Rng& rng, int n, long lo, long hi) {
  std::set<long> s;
  while (static_cast<int>(s.size()) < n) s.insert(rng.uniform(lo, hi));
  std::vector<long> v(s.begin(), s.end());
  // random order
  for (int i = n - 1; i > 0; --i)
    std::swap(v[static_cast<size_t>(i)],
              v[static_cast<size_t>(rng.uniform(0, i))]);
  return v;
}

NormedIsocrystal random_instance(Rng& rng, int n, long slope_lo, long slope_hi,
                                 long kmin, long kmax, long emin, long emax) {
  NormedIsocrystal D;
  D.slopes = random_distinct(rng, n, slope_lo, slope_hi);
  D.lattice = random_lattice(rng, n, kmin, kmax, emin, emax);
  return D;
}

struct CaseOutcome {
  bool failed = false;
  json detail;
};

SuiteResult run_parallel_cases(const std::string& name, uint64_t seed, int cases,
                               const std::function<CaseOutcome(uint64_t, size_t)>& body) {
  SuiteResult res;
  res.suite = name;
  res.seed = seed;
  res.cases = cases;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<CaseOutcome> outcomes(static_cast<size_t>(cases));
  parallel_for(static_cast<size_t>(cases), [&](size_t i) {
    try {
      outcomes[i] = body(suite_case_seed(seed, i), i);
    } catch (const std::exception& e) {
      outcomes[i].failed = true;
      outcomes[i].detail = json{{"case", i}, {"error", e.what()}};
    }
  });
  for (const auto& o : outcomes) {
    if (o.failed) ++res.failures;
    if (!o.detail.is_null()) res.details.push_back(o.detail);
  }
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

// ----- tensor / direct-sum case generators (shared with the energy suite)

PairCase make_tensor_case(uint64_t cs) {
  Rng rng(cs);
  int n1 = static_cast<int>(rng.uniform(1, 3));
  int n2 = static_cast<int>(rng.uniform(1, 3));
  PairCase pc;
  pc.a.slopes = random_distinct(rng, n1, -3, 3);
  pc.a.lattice = random_lattice(rng, n1, -2, 2, -2, 2);
  std::vector<long> s2 = random_distinct(rng, n2, -3, 3);
  for (auto& s : s2) s *= 10;  // all pairwise sums distinct
  pc.b.slopes = s2;
  pc.b.lattice = random_lattice(rng, n2, -2, 2, -2, 2);
  pc.prod = tensor(pc.a, pc.b);
  if (!pc.prod.slopes_distinct()) throw error("tensor case: slope sums collide");
  return pc;
}

PairCase make_dsum_case(uint64_t cs) {
  Rng rng(cs);
  int n1 = static_cast<int>(rng.uniform(1, 3));
  int n2 = static_cast<int>(rng.uniform(1, 3));
  PairCase pc;
  pc.a.slopes = random_distinct(rng, n1, -3, 3);
  for (auto& s : pc.a.slopes) s *= 2;  // evens
  pc.a.lattice = random_lattice(rng, n1, -2, 2, -2, 2);
  pc.b.slopes = random_distinct(rng, n2, -3, 2);
  for (auto& s : pc.b.slopes) s = 2 * s + 1;  // odds: disjoint from evens
  pc.b.lattice = random_lattice(rng, n2, -2, 2, -2, 2);
  pc.prod = direct_sum(pc.a, pc.b);
  return pc;
}

SuiteResult run_tensor_suite(uint64_t seed, int cases) {
  return run_parallel_cases("tensor", seed, cases, [](uint64_t cs, size_t i) {
    PairCase pc = make_tensor_case(cs);
    HNResult ha = hn_filtration(pc.a);
    HNResult hb = hn_filtration(pc.b);
    HNResult hp = hn_filtration(pc.prod);
    Filtration lhs = hp.as_filtration(pc.prod.rank());
    Filtration rhs = filt_tensor(ha.as_filtration(pc.a.rank()),
                                 hb.as_filtration(pc.b.rank()));
    CaseOutcome out;
    if (!(lhs == rhs)) {
      out.failed = true;
      out.detail = json{{"case", i},
                        {"why", "hn(tensor) != tensor(hn, hn)"},
                        {"a", normed_isocrystal_to_json(pc.a, "t")},
                        {"b", normed_isocrystal_to_json(pc.b, "t")}};
    }
    return out;
  });
}

SuiteResult run_dsum_suite(uint64_t seed, int cases) {
  return run_parallel_cases("dsum", seed, cases, [](uint64_t cs, size_t i) {
    PairCase pc = make_dsum_case(cs);
    HNResult ha = hn_filtration(pc.a);
    HNResult hb = hn_filtration(pc.b);
    HNResult hp = hn_filtration(pc.prod);
    Filtration lhs = hp.as_filtration(pc.prod.rank());
    Filtration rhs = filt_direct_sum(ha.as_filtration(pc.a.rank()),
                                     hb.as_filtration(pc.b.rank()));
    CaseOutcome out;
    bool ok = lhs == rhs;
    // v(dsum) must be the sorted merge of the two slope vectors
    Coweight merged = ha.v;
    merged.insert(merged.end(), hb.v.begin(), hb.v.end());
    std::sort(merged.begin(), merged.end(),
              [](const Rational& x, const Rational& y) { return y < x; });
    ok = ok && merged == hp.v;
    if (!ok) {
      out.failed = true;
      out.detail = json{{"case", i},
                        {"why", "hn(dsum) != dsum(hn, hn)"},
                        {"a", normed_isocrystal_to_json(pc.a, "t")},
                        {"b", normed_isocrystal_to_json(pc.b, "t")}};
    }
    return out;
  });
}

SuiteResult run_cocycle_suite(uint64_t seed, int cases) {
  return run_parallel_cases("cocycle", seed, cases, [](uint64_t cs, size_t i) {
    Rng rng(cs);
    int n = static_cast<int>(rng.uniform(1, 4));
    LatticePresentation A = random_lattice(rng, n, -4, 4, -2, 2);
    LatticePresentation B = random_lattice(rng, n, -4, 4, -2, 2);
    LatticePresentation C = random_lattice(rng, n, -4, 4, -2, 2);
    // nu_distance itself asserts the adapted-basis and determinant routes
    long ab = nu_distance(A, B);
    long bc = nu_distance(B, C);
    long ac = nu_distance(A, C);
    CaseOutcome out;
    bool ok = (ac == ab + bc) && nu_distance(A, A) == 0 &&
              nu_distance(B, A) == -ab;
    if (!ok) {
      out.failed = true;
      out.detail = json{{"case", i}, {"why", "nu cocycle identity failed"}};
    }
    return out;
  });
}

namespace {

Rational hn_energy(const HNResult& hn) {
  Rational acc(0);
  for (size_t t = 0; t < hn.graded_degrees.size(); ++t)
    acc -= make_rat(hn.graded_degrees[t] * hn.graded_degrees[t],
                    hn.graded_ranks[t]);
  return acc;
}

// Minimizer characterization over all coordinate filtrations. The energy of
// a filtration with jumps s_1 > ... > s_k on a chain with degree increments
// read off the degree table satisfies, by Abel summation and concavity,
//
//   energy(f) >= energy(f_HN)  with equality only for f = f_HN,
//
// provided (a) every subset's (rank, degree) lies on or below the HN
// polygon, and (b) each polygon corner is hit by exactly one subset (the HN
// chain member). We verify (a) and (b) exactly over all 2^n subsets, plus
// the strengthened inequality on an explicit two-step family.
CaseOutcome energy_check_instance(const NormedIsocrystal& D, size_t case_idx,
                                  const char* tag) {
  CaseOutcome out;
  int n = D.rank();
  std::vector<long> table = degree_table(D);
  HNResult hn = hn_from_degree_table(n, table);
  Rational ehn = hn_energy(hn);
  unsigned full = (1u << n) - 1u;
  auto fail = [&](const std::string& why) {
    out.failed = true;
    out.detail = json{{"case", case_idx}, {"instance", tag}, {"why", why},
                      {"D", normed_isocrystal_to_json(D, "t")}};
  };

  // cumulative (rank, degree) corners of the HN polygon
  std::vector<long> R = {0}, Dg = {0};
  for (size_t t = 0; t < hn.graded_ranks.size(); ++t) {
    R.push_back(R.back() + hn.graded_ranks[t]);
    Dg.push_back(Dg.back() + hn.graded_degrees[t]);
  }
  std::vector<int> corner_hits(R.size(), 0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    long r = __builtin_popcount(mask);
    long d = table[mask];
    size_t t = 1;
    while (R[t] < r) ++t;
    // P(r) on piece t, through (R[t-1], Dg[t-1]) with slope of piece t
    Rational pr = Rational(Dg[t - 1]) +
                  hn.graded_slopes[t - 1] * Rational(r - R[t - 1]);
    if (Rational(d) > pr) {
      fail("subset degree exceeds the HN polygon");
      return out;
    }
    if (R[t] == r && d == Dg[t]) ++corner_hits[t];
  }
  for (size_t t = 1; t < R.size(); ++t)
    if (corner_hits[t] != 1) {
      fail("HN polygon corner is not uniquely attained");
      return out;
    }
  // the filtspace energy of the HN filtration equals -sum d^2/r
  {
    Filtration F = hn.as_filtration(n);
    std::vector<Rational> gdeg;
    for (long d : hn.graded_degrees) gdeg.push_back(Rational(d));
    if (filt_energy(F, gdeg) != ehn) {
      fail("filtration energy disagrees with the graded formula");
      return out;
    }
  }
  // strengthened inequality with the exact rational gap, on the two-step
  // family with jumps (1, 0)
  long dtot = table[full];
  for (unsigned mask = 1; mask < full; ++mask) {
    long sz = __builtin_popcount(mask);
    Rational ef = Rational(static_cast<int>(sz)) -
                  Rational(2) * Rational(static_cast<long>(table[mask]));
    Rational gap = make_rat((sz - dtot) * (sz - dtot), n);
    if (!(ehn <= ef - gap)) {
      fail("strengthened minimizer inequality failed");
      return out;
    }
  }
  return out;
}

}  // namespace

SuiteResult run_energy_suite(uint64_t seed, int cases) {
  return run_parallel_cases("energy", seed, cases, [](uint64_t cs, size_t i) {
    PairCase tc = make_tensor_case(cs);
    PairCase dc = make_dsum_case(cs);
    for (const NormedIsocrystal* D :
         {&tc.a, &tc.b, &tc.prod, &dc.a, &dc.b, &dc.prod}) {
      CaseOutcome out = energy_check_instance(*D, i, "suite instance");
      if (out.failed) return out;
    }
    return CaseOutcome{};
  });
}

SuiteResult run_bb_suite(uint64_t seed, int cases) {
  SuiteResult main = run_parallel_cases("bb", seed, cases, [](uint64_t cs, size_t i) {
    Rng rng(cs);
    int n = static_cast<int>(rng.uniform(1, 3));
    NormedIsocrystal D = random_instance(rng, n, -4, 4, -3, 3, -2, 2);
    CaseOutcome out;
    IsocrystalClass lat = hn_class(D);
    FilteredIsocrystal F = bb_image(D);
    Coweight mu = relative_position(D.lattice);
    IsocrystalClass fil = filtered_hn_class(F, D.dim(), mu);
    bool ok = lat.kappa_total() == fil.kappa_total() &&
              dominance_leq(lat.newton(), fil.newton(),
                            LeviComposition::group(n));
    // classical sublattice: equality holds on the nose
    QMat x(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        x.at(r, c) = (r == c) ? Rational(1)
                              : Rational(static_cast<int>(rng.uniform(-2, 2)));
    if (det(x) == Rational(0)) x = QMat::identity(n);
    Coweight cmu(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) cmu[static_cast<size_t>(r)] = Rational(static_cast<int>(rng.uniform(-2, 2)));
    std::sort(cmu.begin(), cmu.end(),
              [](const Rational& p, const Rational& q) { return q < p; });
    NormedIsocrystal C;
    C.slopes = D.slopes;
    C.lattice = classical_lattice(x, cmu);
    HNResult hc = hn_filtration(C);
    HNResult hf = filtered_hn(bb_image(C));
    ok = ok && hc.chain == hf.chain && hc.v == hf.v;
    if (!ok) {
      out.failed = true;
      out.detail = json{{"case", i},
                        {"why", "BB comparison failed"},
                        {"D", normed_isocrystal_to_json(D, "t")}};
    }
    return out;
  });

  // strict-gap search: some coordinate subset with lattice degree strictly
  // below its residue-filtration degree must exist (n = 3, exponents <= 3).
  bool found = false;
  json fixture;
  Rng rng(seed ^ 0xabcdef1234567890ull);
  const int samples = 10000;
  for (int s = 0; s < samples && !found; ++s) {
    NormedIsocrystal D = random_instance(rng, 3, -6, 6, -3, 3, -3, 3);
    FilteredIsocrystal F = bb_image(D);
    for (unsigned mask = 1; mask < 7u && !found; ++mask) {
      std::vector<int> S;
      for (int c = 0; c < 3; ++c)
        if (mask & (1u << c)) S.push_back(c);
      long lat = sub_degree(D, S);
      long fil = filtered_sub_degree(F, S);
      if (lat > fil) {
        main.failures++;
        main.details.push_back(json{{"why", "BB inequality violated in gap search"},
                                    {"D", normed_isocrystal_to_json(D, "t")}});
        found = true;
        break;
      }
      if (lat < fil) {
        found = true;
        fixture = json{{"D", normed_isocrystal_to_json(D, "t")},
                       {"subset", S},
                       {"lattice_degree", lat},
                       {"residue_degree", fil},
                       {"sample", s}};
      }
    }
  }
  main.details.push_back(json{{"strict_gap_found", found}, {"fixture", fixture}});
  if (!found) main.failures++;
  return main;
}

SuiteResult run_kottwitz_grid_suite() {
  SuiteResult res;
  res.suite = "kottwitz";
  res.seed = 0;
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0, failures = 0;
  json first_fail;
  for (int n = 1; n <= 4; ++n) {
    std::vector<IsocrystalClass> points =
        enumerate_newton_points(n, Rational(-2), Rational(2));
    // mu grid: dominant integral with |mu_i| <= 3
    std::vector<Coweight> mus;
    {
      std::vector<long> cur(static_cast<size_t>(n));
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          Coweight mu(static_cast<size_t>(n));
          for (int j = 0; j < n; ++j) mu[static_cast<size_t>(j)] = Rational(static_cast<int>(cur[static_cast<size_t>(j)]));
          mus.push_back(mu);
          return;
        }
        long top = (i == 0) ? 3 : cur[static_cast<size_t>(i - 1)];
        for (long v = top; v >= -3; --v) {
          cur[static_cast<size_t>(i)] = v;
          rec(i + 1);
        }
      };
      rec(0);
    }
    for (const auto& b : points) {
      // levi_reductions fibers: finite and round-trip
      for (const auto& M : all_compositions(n)) {
        for (const auto& r : levi_reductions(b, M)) {
          ++checked;
          if (!(induce_to_group(r) == b)) {
            ++failures;
            if (first_fail.is_null())
              first_fail = json{{"why", "levi reduction does not round-trip"},
                                {"b", class_to_json(b)},
                                {"M", M.blocks}};
          }
        }
      }
      for (const auto& mu : mus) {
        ++checked;
        long kp = b.kappa_total() - to_long(sum_of(mu));
        IsocrystalClass bp = basic_class(n, make_rat(kp, n));
        Verdict v = stratum_nonempty(mu, b, bp);
        bool wa = wa_nonempty(mu, b);
        if (v == Verdict::unknown || (v == Verdict::yes) != wa) {
          ++failures;
          if (first_fail.is_null())
            first_fail = json{{"why", "basic stratum verdict disagrees with wa"},
                              {"b", class_to_json(b)},
                              {"mu", coweight_to_json(mu)}};
        }
      }
    }
  }
  res.cases = checked;
  res.failures = failures;
  if (!first_fail.is_null()) res.details.push_back(first_fail);
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SuiteResult run_smmu_suite() {
  SuiteResult res;
  res.suite = "smmu";
  res.seed = 0;
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0, failures = 0;
  json first_fail;
  auto fail = [&](const json& j) {
    ++failures;
    if (first_fail.is_null()) first_fail = j;
  };
  // exhaustive mu, normalized to last entry 0 (all claims are invariant
  // under central shifts); spreads pinned per rank to keep the grid exact
  auto spread_for = [](int n) { return n <= 3 ? 8 : (n == 4 ? 5 : 4); };
  for (int n = 1; n <= 5; ++n) {
    std::vector<Coweight> mus;
    std::vector<long> cur(static_cast<size_t>(n));
    long spread = spread_for(n);
    std::function<void(int)> rec = [&](int i) {
      if (i == n) {
        if (cur[static_cast<size_t>(n - 1)] != 0) return;
        Coweight mu(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) mu[static_cast<size_t>(j)] = Rational(static_cast<int>(cur[static_cast<size_t>(j)]));
        mus.push_back(mu);
        return;
      }
      long top = (i == 0) ? spread : cur[static_cast<size_t>(i - 1)];
      for (long v = top; v >= 0; --v) {
        cur[static_cast<size_t>(i)] = v;
        rec(i + 1);
      }
    };
    rec(0);
    for (const auto& mu : mus) {
      Rational kappa_mu = sum_of(mu);
      std::vector<Coweight> orbit = weyl_orbit(mu);
      for (const auto& M : all_compositions(n)) {
        ++checked;
        SMuResult sm = s_m_mu(mu, M);
        std::vector<Coweight> dom = sigma_m_dom(mu, M);
        std::vector<Coweight> mx = sigma_m_max(mu, M);
        // inclusion
        for (const auto& lam : mx)
          if (std::find(dom.begin(), dom.end(), lam) == dom.end())
            fail(json{{"why", "max set not inside dom set"},
                      {"mu", coweight_to_json(mu)},
                      {"M", M.blocks}});
        // kappa preservation for every member
        for (const auto& lam : dom)
          if (sum_of(lam) != kappa_mu)
            fail(json{{"why", "kappa(lambda) != kappa(mu)"},
                      {"mu", coweight_to_json(mu)},
                      {"M", M.blocks}});
        // equality cases
        if ((is_minuscule(mu) || M.is_torus()) && !(mx == dom))
          fail(json{{"why", "bounds not equal in an exact case"},
                    {"mu", coweight_to_json(mu)},
                    {"M", M.blocks}});
        if (sm.exact && !(sm.lower == sm.upper))
          fail(json{{"why", "exact result with lower != upper"},
                    {"mu", coweight_to_json(mu)},
                    {"M", M.blocks}});
        // the classical set sits inside the maximal set
        for (const auto& lam : s_m_mu_cl(mu, M))
          if (std::find(mx.begin(), mx.end(), lam) == mx.end())
            fail(json{{"why", "classical member missing from the maximal set"},
                      {"mu", coweight_to_json(mu)},
                      {"M", M.blocks}});
        // for minuscule mu the whole set is one orbit, so theta lands in
        // theta(W mu); for general mu only finiteness survives
        if (is_minuscule(mu)) {
          std::set<std::vector<long>> wtheta;
          for (const auto& w : orbit) wtheta.insert(theta(w, M));
          for (const auto& lam : dom)
            if (!wtheta.count(theta(lam, M)))
              fail(json{{"why", "theta image escapes theta(W mu)"},
                        {"mu", coweight_to_json(mu)},
                        {"M", M.blocks}});
        }
      }
    }
  }
  res.cases = checked;
  res.failures = failures;
  if (!first_fail.is_null()) res.details.push_back(first_fail);
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SuiteResult run_dimension_suite() {
  SuiteResult res;
  res.suite = "dimension";
  res.seed = 0;
  auto t0 = std::chrono::steady_clock::now();
  int checked = 0, failures = 0;
  json first_fail;
  auto fail = [&](const json& j) {
    ++failures;
    if (first_fail.is_null()) first_fail = j;
  };
  for (int n = 1; n <= 5; ++n) {
    Coweight rho = half_sum(LeviComposition::group(n), n);
    std::vector<Coweight> mus;
    for (int k = 0; k <= n; ++k) {
      Coweight mu(static_cast<size_t>(n), Rational(0));
      for (int i = 0; i < k; ++i) mu[static_cast<size_t>(i)] = Rational(1);
      mus.push_back(mu);
    }
    for (long num = -2 * n; num <= 2 * n; ++num) {
      IsocrystalClass b = basic_class(n, make_rat(num, n));
      for (const auto& mu : mus) {
        ++checked;
        std::vector<StratumRecord> recs = enumerate_strata(mu, b);
        long kp = b.kappa_total() - to_long(sum_of(mu));
        for (const auto& r : recs) {
          if (r.nonempty != Verdict::yes) {
            fail(json{{"why", "minuscule stratum with uncertain verdict"},
                      {"mu", coweight_to_json(mu)},
                      {"b", class_to_json(b)}});
            continue;
          }
          if (!r.dimension) {
            fail(json{{"why", "missing dimension on a minuscule stratum"},
                      {"mu", coweight_to_json(mu)},
                      {"b", class_to_json(b)}});
            continue;
          }
          // stratum_dim already cross-checks the two printed forms; rerun it
          long d = stratum_dim(mu, b, r.b_prime);
          if (d != *r.dimension)
            fail(json{{"why", "dimension recomputation mismatch"}});
          if (r.b_prime.basic()) {
            Rational expect = Rational(2) * pairing(mu, rho);
            if (Rational(static_cast<long>(d)) != expect)
              fail(json{{"why", "basic stratum dimension != <mu, 2 rho>"},
                        {"mu", coweight_to_json(mu)},
                        {"b", class_to_json(b)},
                        {"dim", d}});
          }
          if (!r.classical)
            fail(json{{"why", "nonempty minuscule stratum without classical points"},
                      {"mu", coweight_to_json(mu)},
                      {"b", class_to_json(b)}});
          if (r.b_prime.kappa_total() != kp)
            fail(json{{"why", "stratum kappa != kappa(b) - mu_sharp"}});
        }
      }
    }
  }
  // pinned GL4 values: mu = (1,1,0,0), b = 1
  {
    Coweight mu = {Rational(1), Rational(1), Rational(0), Rational(0)};
    IsocrystalClass b = basic_class(4, Rational(0));
    std::vector<StratumRecord> recs = enumerate_strata(mu, b);
    std::multiset<long> dims;
    for (const auto& r : recs)
      if (r.dimension) dims.insert(*r.dimension);
    std::multiset<long> expect = {0, 1, 2, 2, 4};
    ++checked;
    if (dims != expect)
      fail(json{{"why", "GL4 (1,1,0,0) dimension multiset mismatch"},
                {"got", std::vector<long>(dims.begin(), dims.end())}});
  }
  // central shifts leave the stratification and its dimensions unchanged
  // (justifies normalizing minuscule mu above): mu -> mu + c, nu' -> nu' + c
  for (int n = 2; n <= 3; ++n) {
    for (long c : {-1L, 1L, 2L}) {
      for (int k = 1; k < n; ++k) {
        Coweight mu(static_cast<size_t>(n), Rational(0));
        for (int i = 0; i < k; ++i) mu[static_cast<size_t>(i)] = Rational(1);
        Coweight mu_shift = mu;
        for (auto& x : mu_shift) x += c;
        IsocrystalClass b = basic_class(n, make_rat(1, n));
        auto base = enumerate_strata(mu, b);
        auto shifted_recs = enumerate_strata(mu_shift, b);
        ++checked;
        bool ok = base.size() == shifted_recs.size();
        for (size_t i = 0; ok && i < base.size(); ++i) {
          Coweight nu = base[i].b_prime.newton();
          for (auto& x : nu) x -= c;
          ok = nu == shifted_recs[i].b_prime.newton() &&
               base[i].dimension == shifted_recs[i].dimension &&
               base[i].classical == shifted_recs[i].classical;
        }
        if (!ok)
          fail(json{{"why", "stratification not invariant under central shift"},
                    {"mu", coweight_to_json(mu)},
                    {"c", c}});
      }
    }
  }
  res.cases = checked;
  res.failures = failures;
  if (!first_fail.is_null()) res.details.push_back(first_fail);
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SuiteResult run_gl3_example_suite() {
  SuiteResult res;
  res.suite = "gl3";
  res.seed = 0;
  auto t0 = std::chrono::steady_clock::now();
  int failures = 0;
  json detail;
  Coweight mu = {Rational(3), Rational(1), Rational(1)};
  IsocrystalClass b = make_class(
      LeviComposition::group(3),
      {{make_rat(5, 2), make_rat(5, 2), Rational(0)}});
  json report = strata_enumerate_report(mu, b);
  auto expect_nu = [](std::initializer_list<const char*> xs) {
    json a = json::array();
    for (const char* x : xs) a.push_back(x);
    return a;
  };
  bool ok = report.at("strata").size() == 3;
  if (ok) {
    ok = ok && report["strata"][0]["nu_b_prime"] == expect_nu({"1/2", "1/2", "-1"});
    ok = ok && report["strata"][1]["nu_b_prime"] == expect_nu({"1", "1", "-2"});
    ok = ok && report["strata"][2]["nu_b_prime"] == expect_nu({"3/2", "3/2", "-3"});
    ok = ok && report["strata"][0]["classical"] == true;
    ok = ok && report["strata"][1]["classical"] == false;
    ok = ok && report["strata"][2]["classical"] == true;
    for (int i = 0; i < 3; ++i)
      ok = ok && report["strata"][static_cast<size_t>(i)]["nonempty"] == "yes";
  }
  // the semistable stratum (0,0,0) comes out empty and the report says so
  ok = ok && report.at("semistable").at("nonempty") == false;
  ok = ok && report.at("semistable").contains("note");
  if (!ok) {
    ++failures;
    detail = json{{"why", "GL3 anchor mismatch"}, {"report", report}};
  }
  res.cases = 1;
  res.failures = failures;
  if (!detail.is_null()) res.details.push_back(detail);
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

SuiteResult run_suite_by_name(const std::string& name, uint64_t seed, int cases) {
  if (name == "tensor") return run_tensor_suite(seed, cases);
  if (name == "dsum") return run_dsum_suite(seed, cases);
  if (name == "cocycle") return run_cocycle_suite(seed, cases);
  if (name == "energy") return run_energy_suite(seed, cases);
  if (name == "bb") return run_bb_suite(seed, cases);
  if (name == "kottwitz") return run_kottwitz_grid_suite();
  if (name == "smmu") return run_smmu_suite();
  if (name == "dimension") return run_dimension_suite();
  if (name == "gl3") return run_gl3_example_suite();
  throw parse_error("unknown suite \"" + name + "\"");
}

}  // namespace hnstrata
