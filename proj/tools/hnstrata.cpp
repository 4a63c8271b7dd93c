#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hnstrata/cli.hpp"

using hnstrata::JobConfig;

namespace {

int emit(const hnstrata::RunResult& rr, const std::string& out_path) {
  std::string text = hnstrata::dump_report(rr.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return hnstrata::exit_parse_error;
    }
    out << text;
  }
  if (rr.exit_code == hnstrata::exit_parse_error && rr.report.contains("error"))
    std::cerr << "error: " << rr.report["error"].get<std::string>() << "\n";
  return rr.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Harder-Narasimhan stratum toolkit for GL_n"};
  app.require_subcommand(1);

  std::string group, mu_csv, b_csv, bp_csv, levi_csv, out_path, lattice_path, suite;
  uint64_t seed = 42;
  int cases = 200;
  bool require_exact = false;

  auto add_common = [&](CLI::App* cmd, bool need_b) {
    cmd->add_option("--group", group, "GLn or n")->required();
    cmd->add_option("--mu", mu_csv, "dominant integral coweight, e.g. 3,1,1")->required();
    if (need_b) cmd->add_option("--b", b_csv, "Newton slopes of b, e.g. 5/2,5/2,0")->required();
    cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
  };

  auto* strata = app.add_subcommand("strata", "Harder-Narasimhan strata");
  auto* enumerate = strata->add_subcommand("enumerate", "enumerate all strata for (mu, b)");
  add_common(enumerate, true);
  enumerate->add_flag("--require-exact", require_exact,
                      "fail (exit 2) when any verdict is unknown");
  auto* dim = strata->add_subcommand("dim", "dimension of one stratum (minuscule mu)");
  add_common(dim, true);
  dim->add_option("--b-prime", bp_csv, "Newton slopes of b'")->required();
  auto* classical = strata->add_subcommand("classical", "classical points of one stratum");
  add_common(classical, true);
  classical->add_option("--b-prime", bp_csv, "Newton slopes of b'")->required();
  classical->add_flag("--require-exact", require_exact);

  auto* smmu = app.add_subcommand("smmu", "certified S_M(mu) bounds");
  add_common(smmu, false);
  smmu->add_option("--levi", levi_csv, "block sizes, e.g. 2,2")->required();

  auto* hn = app.add_subcommand("hn", "HN filtration of a lattice file");
  hn->add_option("file", lattice_path, "lattice JSON file")->required();
  hn->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite,
                     "tensor | dsum | cocycle | energy | bb | kottwitz | smmu | "
                     "dimension | gl3")
      ->required();
  verify->add_option("--seed", seed, "RNG seed (echoed into the report)");
  verify->add_option("--cases", cases, "number of randomized cases");
  verify->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  JobConfig cfg;
  cfg.seed = seed;
  cfg.cases = cases;
  cfg.require_exact = require_exact;
  cfg.out_path = out_path;
  try {
    if (enumerate->parsed() || dim->parsed() || classical->parsed() || smmu->parsed()) {
      cfg.group = hnstrata::parse_group(group);
      cfg.mu = hnstrata::coweight_from_csv(mu_csv);
    }
    if (enumerate->parsed()) {
      cfg.command = "strata.enumerate";
      cfg.b = hnstrata::parse_group_class(cfg.group, b_csv);
    } else if (dim->parsed()) {
      cfg.command = "strata.dim";
      cfg.b = hnstrata::parse_group_class(cfg.group, b_csv);
      cfg.b_prime = hnstrata::parse_group_class(cfg.group, bp_csv);
    } else if (classical->parsed()) {
      cfg.command = "strata.classical";
      cfg.b = hnstrata::parse_group_class(cfg.group, b_csv);
      cfg.b_prime = hnstrata::parse_group_class(cfg.group, bp_csv);
    } else if (smmu->parsed()) {
      cfg.command = "smmu";
      hnstrata::Coweight blocks = hnstrata::coweight_from_csv(levi_csv);
      std::vector<int> bs;
      for (const auto& x : blocks) bs.push_back(static_cast<int>(hnstrata::to_long(x)));
      cfg.levi = hnstrata::LeviComposition(bs);
    } else if (hn->parsed()) {
      cfg.command = "hn";
      cfg.lattice_path = lattice_path;
    } else if (verify->parsed()) {
      cfg.command = "verify";
      cfg.suite = suite;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hnstrata::exit_parse_error;
  }

  return emit(hnstrata::run(cfg), cfg.out_path);
}
