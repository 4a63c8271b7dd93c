#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hnstrata/json_io.hpp"

namespace hnstrata {

// Exit codes: 0 ok, 1 parse/validation error, 2 unknown verdict under
// --require-exact, 3 property-suite failure.
enum ExitCode : int {
  exit_ok = 0,
  exit_parse_error = 1,
  exit_unknown_verdict = 2,
  exit_suite_failure = 3,
};

struct JobConfig {
  std::string command;  // strata.enumerate | strata.dim | strata.classical |
                        // smmu | hn | verify
  int group = 0;        // rank n of GL_n
  Coweight mu;
  std::optional<IsocrystalClass> b;
  std::optional<IsocrystalClass> b_prime;
  std::optional<LeviComposition> levi;
  std::string lattice_path;
  std::string suite;
  uint64_t seed = 42;
  int cases = 200;
  bool require_exact = false;
  std::string out_path;  // empty = stdout
};

// "GL3" or "3" -> 3.
int parse_group(const std::string& s);

// Validated b/b' from a comma-separated G-slope list. Throws on invalid
// Newton polygons (integrality) or malformed rationals.
IsocrystalClass parse_group_class(int n, const std::string& slopes_csv);

struct RunResult {
  int exit_code = exit_ok;
  json report;
};

// Dispatch on config.command; never throws (errors come back as exit code 1
// with an "error" report).
RunResult run(const JobConfig& config);

}  // namespace hnstrata
