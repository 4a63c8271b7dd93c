#include "hnstrata/json_io.hpp"

#include <sstream>

namespace hnstrata {

json coweight_to_json(const Coweight& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_string(x));
  return a;
}

Coweight coweight_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("coweight: expected a JSON array");
  Coweight v;
  for (const auto& e : j) {
    if (e.is_number_integer())
      v.push_back(Rational(static_cast<long>(e.get<long>())));
    else if (e.is_string())
      v.push_back(rat_from_string(e.get<std::string>()));
    else
      throw parse_error("coweight: entries must be strings or integers");
  }
  return v;
}

json class_to_json(const IsocrystalClass& c) {
  json j;
  j["levi"] = c.levi.blocks;
  json blocks = json::array();
  for (const auto& blk : c.slopes) {
    json b = json::array();
    for (const auto& s : blk) b.push_back(rat_to_string(s));
    blocks.push_back(b);
  }
  j["slopes"] = blocks;
  j["kappa"] = c.kappa;
  return j;
}

IsocrystalClass class_from_json(const json& j) {
  std::vector<int> blocks = j.at("levi").get<std::vector<int>>();
  std::vector<std::vector<Rational>> slopes;
  for (const auto& blk : j.at("slopes")) {
    std::vector<Rational> b;
    for (const auto& e : blk) {
      if (e.is_number_integer())
        b.push_back(Rational(static_cast<long>(e.get<long>())));
      else
        b.push_back(rat_from_string(e.get<std::string>()));
    }
    slopes.push_back(b);
  }
  return make_class(LeviComposition(blocks), slopes);  // kappa derived
}

json witness_to_json(const Witness& w) {
  json j;
  j["b_M"] = class_to_json(w.b_M);
  j["lambda"] = coweight_to_json(w.lambda);
  j["certified"] = w.certified;
  return j;
}

json stratum_record_to_json(const StratumRecord& r) {
  json j;
  j["nu_b_prime"] = coweight_to_json(r.b_prime.newton());
  j["kappa"] = r.b_prime.kappa_total();
  j["levi"] = r.levi.blocks;
  j["nonempty"] = verdict_to_string(r.nonempty);
  j["classical"] = r.classical;
  if (r.dimension)
    j["dimension"] = *r.dimension;
  else
    j["dimension"] = nullptr;
  json ws = json::array();
  for (const auto& w : r.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = ws;
  return j;
}

json normed_isocrystal_to_json(const NormedIsocrystal& D, const std::string& var) {
  json j;
  j["n"] = D.rank();
  j["var"] = var;
  j["slopes"] = D.slopes;
  json rows = json::array();
  for (int i = 0; i < D.lattice.n; ++i) {
    json row = json::array();
    for (int c = 0; c < D.lattice.n; ++c)
      row.push_back(laurent_to_string(D.lattice.mat.at(i, c), var));
    rows.push_back(row);
  }
  j["matrix"] = rows;
  return j;
}

NormedIsocrystal normed_isocrystal_from_json(const json& j, std::string* var_out) {
  NormedIsocrystal D;
  int n = j.at("n").get<int>();
  std::string var = j.value("var", std::string("t"));
  if (var_out) *var_out = var;
  D.slopes = j.at("slopes").get<std::vector<long>>();
  if (static_cast<int>(D.slopes.size()) != n)
    throw parse_error("lattice file: slopes length != n");
  const json& rows = j.at("matrix");
  if (static_cast<int>(rows.size()) != n)
    throw parse_error("lattice file: matrix row count != n");
  D.lattice.n = n;
  D.lattice.mat = LMat(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != n)
      throw parse_error("lattice file: matrix column count != n");
    for (int c = 0; c < n; ++c)
      D.lattice.mat.at(i, c) =
          laurent_from_string(row.at(static_cast<size_t>(c)).get<std::string>(), var);
  }
  if (bareiss_det(D.lattice.mat).is_zero())
    throw singular_matrix("lattice file: singular matrix");
  return D;
}

Coweight coweight_from_csv(const std::string& s) {
  Coweight v;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    // trim spaces
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos) throw parse_error("empty coweight entry in \"" + s + "\"");
    v.push_back(rat_from_string(cur.substr(a, b - a + 1)));
  }
  if (v.empty()) throw parse_error("empty coweight \"" + s + "\"");
  return v;
}

json strata_enumerate_report(const Coweight& mu, const IsocrystalClass& b) {
  std::vector<StratumRecord> records = enumerate_strata(mu, b);
  json j;
  j["command"] = "strata.enumerate";
  j["group"] = "GL" + std::to_string(b.rank());
  j["mu"] = coweight_to_json(mu);
  j["b"] = class_to_json(b);
  long kappa_prime = b.kappa_total() - to_long(sum_of(mu));
  j["kappa_b_prime"] = kappa_prime;

  // semistable stratum status, surfaced whether or not it is empty
  int n = b.rank();
  Coweight basic_nu(static_cast<size_t>(n), make_rat(kappa_prime, n));
  bool wa = wa_nonempty(mu, b);
  json ss;
  ss["nu_b_prime"] = coweight_to_json(basic_nu);
  ss["nonempty"] = wa;
  if (!wa)
    ss["note"] =
        "semistable stratum is empty: centered mu does not dominate centered nu_b";
  j["semistable"] = ss;

  json arr = json::array();
  bool all_certain = true;
  for (const auto& r : records) {
    if (r.nonempty == Verdict::unknown) all_certain = false;
    arr.push_back(stratum_record_to_json(r));
  }
  j["strata"] = arr;
  j["all_certain"] = all_certain;
  return j;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hnstrata
