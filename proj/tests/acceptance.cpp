// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "hnstrata/suites.hpp"

using namespace hnstrata;

namespace {

struct Criterion {
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string note;
};

std::vector<Criterion> results;

void record(const std::string& name, const SuiteResult& sr, bool extra_ok = true,
            const std::string& note = "") {
  Criterion c;
  c.name = name;
  c.pass = sr.ok() && extra_ok;
  c.seconds = sr.seconds;
  c.note = note;
  if (!sr.ok() && !sr.details.empty())
    c.note = sr.details.front().dump();
  results.push_back(c);
}

}  // namespace

int main() {
  // 1. GL3 worked example, runtime < 1 s
  {
    SuiteResult sr = run_gl3_example_suite();
    bool in_time = sr.seconds < 1.0;
    record("1 GL3 worked example (3 strata, classical flags, semistable note)",
           sr, in_time, in_time ? "" : "exceeded 1 s");
  }
  // 2. tensor compatibility, 200 seeded pairs, < 30 s
  {
    SuiteResult sr = run_tensor_suite(42, 200);
    bool in_time = sr.seconds < 30.0;
    record("2 HN tensor compatibility (200 cases)", sr, in_time,
           in_time ? "" : "exceeded 30 s");
  }
  // 3. direct-sum compatibility, 200 seeded pairs
  record("3 HN direct-sum compatibility (200 cases)", run_dsum_suite(42, 200));
  // 4. nu cocycle and two-route agreement, 200 seeded triples
  record("4 nu cocycle and route agreement (200 cases)",
         run_cocycle_suite(42, 200));
  // 5. energy characterization over all coordinate filtrations
  record("5 energy minimization with the strengthened gap (200 cases)",
         run_energy_suite(42, 200));
  // 6. BB comparison, classical equality, strict-gap fixture (500 lattices)
  record("6 BB comparison and strict gap (500 cases)", run_bb_suite(42, 500));
  // 7. dimension formula, both printed forms, exhaustive minuscule grid
  record("7 dimension formula, minuscule grid n <= 5", run_dimension_suite());
  // 8. Kottwitz-set consistency on the exhaustive grid
  record("8 basic-stratum/wa agreement and reduction round-trips (n <= 4)",
         run_kottwitz_grid_suite());
  // 9. S_M(mu) certification
  record("9 S_M(mu) certification grid (n <= 5)", run_smmu_suite());

  bool all = true;
  for (const auto& c : results) {
    std::printf("%s criterion %s (%.2fs)%s%s\n", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.seconds, c.note.empty() ? "" : " -- ",
                c.note.c_str());
    all = all && c.pass;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: all criteria passed"
                          : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
