#pragma once

#include <cstdint>
#include <string>

#include "hnstrata/json_io.hpp"

namespace hnstrata {

struct SuiteResult {
  std::string suite;
  uint64_t seed = 0;
  int cases = 0;
  int failures = 0;
  double seconds = 0.0;
  json details = json::array();

  bool ok() const { return failures == 0; }
  json to_json() const;
};

// Seeded deterministic generators drive every randomized suite; a failure
// appends a reproducible description to details.
SuiteResult run_tensor_suite(uint64_t seed, int cases);
SuiteResult run_dsum_suite(uint64_t seed, int cases);
SuiteResult run_cocycle_suite(uint64_t seed, int cases);
SuiteResult run_energy_suite(uint64_t seed, int cases);
SuiteResult run_bb_suite(uint64_t seed, int cases);

// Exhaustive (seedless) suites; the seed field records the input bound set.
SuiteResult run_kottwitz_grid_suite();
SuiteResult run_smmu_suite();
SuiteResult run_dimension_suite();
SuiteResult run_gl3_example_suite();

SuiteResult run_suite_by_name(const std::string& name, uint64_t seed, int cases);

// Deterministic splitmix/xorshift generator so reports are byte-identical
// across standard libraries.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ull) {}
  uint64_t next();
  // uniform in [lo, hi] inclusive
  long uniform(long lo, long hi);
  bool coin(double p = 0.5);
};

uint64_t suite_case_seed(uint64_t suite_seed, size_t index);

// The instances a randomized case is built from; `prod` is the tensor
// product resp. direct sum of a and b.
struct PairCase {
  NormedIsocrystal a, b, prod;
};
PairCase make_tensor_case(uint64_t case_seed);
PairCase make_dsum_case(uint64_t case_seed);

}  // namespace hnstrata
