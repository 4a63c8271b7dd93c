#pragma once

#include <json.hpp>

#include "hnstrata/isocengine.hpp"
#include "hnstrata/strata.hpp"

namespace hnstrata {

using json = nlohmann::json;

// Rationals travel as strings, "p" when integral and "p/q" otherwise;
// coweights as arrays of such strings.
json coweight_to_json(const Coweight& v);
Coweight coweight_from_json(const json& j);

// {"levi":[1,2],"slopes":[["0"],["5/2","5/2"]],"kappa":[0,5]}; kappa is
// derived and ignored on input.
json class_to_json(const IsocrystalClass& c);
IsocrystalClass class_from_json(const json& j);

json witness_to_json(const Witness& w);
json stratum_record_to_json(const StratumRecord& r);

// {"n":2,"var":"t","matrix":[["t^-1","0"],["1","1"]],"slopes":[0,1]}
json normed_isocrystal_to_json(const NormedIsocrystal& D, const std::string& var);
NormedIsocrystal normed_isocrystal_from_json(const json& j, std::string* var_out = nullptr);

// "5/2,5/2,0" -> coweight (CLI flag syntax).
Coweight coweight_from_csv(const std::string& s);

// Full report for `strata enumerate`: the records plus the semistable
// stratum status (Newton point, non-emptiness and a reason when empty).
json strata_enumerate_report(const Coweight& mu, const IsocrystalClass& b);

std::string dump_report(const json& j);  // canonical 2-space dump + newline

}  // namespace hnstrata
