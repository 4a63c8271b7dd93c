#include "hnstrata/cli.hpp"

#include <cctype>
#include <fstream>

#include "hnstrata/suites.hpp"

namespace hnstrata {

int parse_group(const std::string& s) {
  std::string t = s;
  if (t.rfind("GL", 0) == 0 || t.rfind("gl", 0) == 0) t = t.substr(2);
  if (t.empty()) throw parse_error("bad group \"" + s + "\"");
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("bad group \"" + s + "\"");
  int n = std::stoi(t);
  if (n <= 0) throw parse_error("group rank must be positive");
  return n;
}

IsocrystalClass parse_group_class(int n, const std::string& slopes_csv) {
  Coweight v = coweight_from_csv(slopes_csv);
  if (static_cast<int>(v.size()) != n)
    throw parse_error("expected " + std::to_string(n) + " slopes, got " +
                      std::to_string(v.size()));
  return make_class(LeviComposition::group(n),
                    {std::vector<Rational>(v.begin(), v.end())});
}

namespace {

void require_mu(const JobConfig& c) {
  if (c.mu.empty()) throw parse_error("--mu is required");
  if (static_cast<int>(c.mu.size()) != c.group)
    throw parse_error("--mu length does not match the group rank");
  if (!is_integral(c.mu)) throw parse_error("--mu must be integral");
  if (!is_dominant(c.mu)) throw parse_error("--mu must be dominant");
}

RunResult run_strata_enumerate(const JobConfig& c) {
  require_mu(c);
  if (!c.b) throw parse_error("--b is required");
  RunResult rr;
  rr.report = strata_enumerate_report(c.mu, *c.b);
  if (c.require_exact && !rr.report.at("all_certain").get<bool>())
    rr.exit_code = exit_unknown_verdict;
  return rr;
}

RunResult run_strata_dim(const JobConfig& c) {
  require_mu(c);
  if (!c.b || !c.b_prime) throw parse_error("--b and --b-prime are required");
  RunResult rr;
  long d = stratum_dim(c.mu, *c.b, *c.b_prime);
  rr.report = json{{"command", "strata.dim"},
                   {"mu", coweight_to_json(c.mu)},
                   {"b", class_to_json(*c.b)},
                   {"b_prime", class_to_json(*c.b_prime)},
                   {"dimension", d}};
  return rr;
}

RunResult run_strata_classical(const JobConfig& c) {
  require_mu(c);
  if (!c.b || !c.b_prime) throw parse_error("--b and --b-prime are required");
  RunResult rr;
  std::vector<Witness> wits;
  Verdict v = stratum_nonempty(c.mu, *c.b, *c.b_prime, &wits);
  bool cl = has_classical_points(c.mu, *c.b, *c.b_prime);
  json ws = json::array();
  for (const auto& w : wits) ws.push_back(witness_to_json(w));
  rr.report = json{{"command", "strata.classical"},
                   {"mu", coweight_to_json(c.mu)},
                   {"b", class_to_json(*c.b)},
                   {"b_prime", class_to_json(*c.b_prime)},
                   {"nonempty", verdict_to_string(v)},
                   {"classical", cl},
                   {"witnesses", ws}};
  if (c.require_exact && v == Verdict::unknown) rr.exit_code = exit_unknown_verdict;
  return rr;
}

RunResult run_smmu(const JobConfig& c) {
  require_mu(c);
  if (!c.levi) throw parse_error("--levi is required");
  if (c.levi->rank() != c.group)
    throw parse_error("--levi blocks must sum to the group rank");
  SMuResult sm = s_m_mu(c.mu, *c.levi);
  auto set_to_json = [](const std::vector<Coweight>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(coweight_to_json(x));
    return a;
  };
  RunResult rr;
  rr.report = json{{"command", "smmu"},
                   {"mu", coweight_to_json(c.mu)},
                   {"levi", c.levi->blocks},
                   {"lower", set_to_json(sm.lower)},
                   {"upper", set_to_json(sm.upper)},
                   {"classical", set_to_json(s_m_mu_cl(c.mu, *c.levi))},
                   {"exact", sm.exact}};
  return rr;
}

RunResult run_hn(const JobConfig& c) {
  if (c.lattice_path.empty()) throw parse_error("a lattice file is required");
  std::ifstream in(c.lattice_path);
  if (!in) throw parse_error("cannot open \"" + c.lattice_path + "\"");
  json jf;
  try {
    in >> jf;
  } catch (const std::exception& e) {
    throw parse_error(std::string("bad lattice file: ") + e.what());
  }
  std::string var;
  NormedIsocrystal D = normed_isocrystal_from_json(jf, &var);
  HNResult hn = hn_filtration(D);
  json chain = json::array();
  for (const auto& S : hn.chain) {
    json s = json::array();
    for (int i : S) s.push_back(i + 1);  // 1-based in reports
    chain.push_back(s);
  }
  json slopes = json::array();
  for (const auto& s : hn.graded_slopes) slopes.push_back(rat_to_string(s));
  RunResult rr;
  rr.report = json{{"command", "hn"},
                   {"lattice", normed_isocrystal_to_json(D, var)},
                   {"relative_position", coweight_to_json(relative_position(D.lattice))},
                   {"chain", chain},
                   {"graded_slopes", slopes},
                   {"v", coweight_to_json(hn.v)},
                   {"hn_class", class_to_json(hn_class(D))}};
  return rr;
}

RunResult run_verify(const JobConfig& c) {
  if (c.suite.empty()) throw parse_error("a suite name is required");
  SuiteResult sr = run_suite_by_name(c.suite, c.seed, c.cases);
  RunResult rr;
  rr.report = sr.to_json();
  rr.report["command"] = "verify";
  if (!sr.ok()) rr.exit_code = exit_suite_failure;
  return rr;
}

}  // namespace

RunResult run(const JobConfig& config) {
  try {
    if (config.command == "strata.enumerate") return run_strata_enumerate(config);
    if (config.command == "strata.dim") return run_strata_dim(config);
    if (config.command == "strata.classical") return run_strata_classical(config);
    if (config.command == "smmu") return run_smmu(config);
    if (config.command == "hn") return run_hn(config);
    if (config.command == "verify") return run_verify(config);
    throw parse_error("unknown command \"" + config.command + "\"");
  } catch (const error& e) {
    return RunResult{exit_parse_error, json{{"error", e.what()}}};
  } catch (const std::exception& e) {
    return RunResult{exit_parse_error, json{{"error", e.what()}}};
  }
}

}  // namespace hnstrata
