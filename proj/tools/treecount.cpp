#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "treecount/job.hpp"

using namespace treecount;

namespace {

void add_input(CLI::App* app, JobSpec& job, std::string& family) {
  app->add_option("--graph6", job.input.graph6, "Tree in graph6 (vertices numbered from 0)");
  app->add_option("--edges", job.input.edge_file, "Edge-list file, '-' for stdin");
  app->add_option("--base", job.input.edge_base, "Edge-list numbering base (0 or 1; default: detect)")
      ->check(CLI::IsMember({0, 1}));
  app->add_option("--family", family, "Named family A, D or E (vertices numbered from 1)")
      ->check(CLI::IsMember({"A", "D", "E"}));
  app->add_option("--n", job.input.family_n, "Size of the named family");
}

void add_phi(CLI::App* app, JobSpec& job) {
  app->add_option("--phi", job.phi, "generic, versal, or k=generic,m=versal keyed by smallest component vertex");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point counts of exchange-relation varieties attached to trees"};
  app.require_subcommand(1);
  app.fallthrough();
  JobSpec job;
  std::string family;
  app.add_flag("--json", job.json, "Print the JSON report");
  app.add_option("--seed", job.seed, "Seed for randomized choices");
  app.add_flag("--force", job.force, "Lift time guards");
  app.add_option("--max-n", job.max_n, "Largest accepted tree size (verify: largest enumerated size)");

  auto* color = app.add_subcommand("color", "Canonical coloring, dominoes and red-green components");
  add_input(color, job, family);

  auto* sets = app.add_subcommand("sets", "Maximum matchings, independent sets, admissible sets");
  add_input(sets, job, family);
  sets->add_flag("--matchings", job.matchings, "List maximum matchings");
  sets->add_flag("--independent", job.independent, "List independent sets");
  sets->add_flag("--admissible", job.admissible, "List admissible sets with signs");
  sets->add_flag("--count-only", job.count_only, "Print counts only");

  auto* normalize = app.add_subcommand("normalize", "Move every coefficient onto the uncovered red vertices");
  add_input(normalize, job, family);

  std::string format = "pretty";
  auto* count = app.add_subcommand("count", "Point-count polynomial");
  add_input(count, job, family);
  add_phi(count, job);
  count->add_option("--format", format, "pretty, json or factored")
      ->check(CLI::IsMember({"pretty", "json", "factored"}));

  std::string engine = "transfer";
  auto* oracle = app.add_subcommand("oracle", "Count points over F_q directly");
  add_input(oracle, job, family);
  add_phi(oracle, job);
  oracle->add_option("--q", job.q, "Prime field size")->required();
  oracle->add_option("--engine", engine, "transfer or brute")->check(CLI::IsMember({"transfer", "brute"}));

  auto* verify = app.add_subcommand("verify", "Compare the polynomial with direct counts");
  add_input(verify, job, family);
  add_phi(verify, job);
  verify->add_option("--primes", job.primes, "Primes to test")->delimiter(',');
  verify->add_option("--engine", engine, "transfer or brute")->check(CLI::IsMember({"transfer", "brute"}));

  std::string cls = "orange", parallel = "per-worker";
  auto* census = app.add_subcommand("census", "Bucket the trees of a class by polynomial");
  census->add_option("--n", job.census_n, "Number of vertices")->required();
  census->add_option("--class", cls, "orange, unimodal-versal or unimodal-generic")
      ->check(CLI::IsMember({"orange", "unimodal-versal", "unimodal-generic"}));
  census->add_flag("--list-collisions", job.list_collisions, "Print the trees sharing a polynomial");
  census->add_option("--parallel", parallel, "serial, per-worker or shared")
      ->check(CLI::IsMember({"serial", "per-worker", "shared"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  job.command = *parse_command(app.get_subcommands().front()->get_name());
  if (!family.empty()) job.input.family = family[0];
  job.format = format == "json" ? OutputFormat::Json : format == "factored" ? OutputFormat::Factored
                                                                             : OutputFormat::Pretty;
  job.engine = engine == "brute" ? OracleEngine::BruteForce : OracleEngine::Transfer;
  job.census_class = cls == "orange"            ? CensusClass::Orange
                     : cls == "unimodal-versal" ? CensusClass::UnimodalVersal
                                                : CensusClass::UnimodalGeneric;
  job.parallelism = parallel == "serial" ? CensusParallelism::Serial
                    : parallel == "shared" ? CensusParallelism::SharedMemo
                                           : CensusParallelism::PerWorkerMemo;

  const JobReport report = run(job);
  if (job.json) {
    std::cout << report.json.dump(2) << "\n";
  } else if (report.json.contains("error")) {
    std::cerr << report.text;
  } else {
    std::cout << report.text;
  }
  return report.exit_code;
}
