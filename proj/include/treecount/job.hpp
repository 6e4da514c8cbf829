#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "treecount/coloring.hpp"
#include "treecount/counting.hpp"
#include "treecount/oracle.hpp"
#include "treecount/phi.hpp"

namespace treecount {

/// Parsed --phi text: a uniform choice, or explicit per-component choices keyed
/// by the smallest vertex of the component, or nothing.
struct PhiSpec {
  std::optional<Phi> uniform;
  std::vector<std::pair<int, Phi>> per_component;

  bool empty() const { return !uniform && per_component.empty(); }
};

/// Accepts "", "generic", "versal", or "k=generic,m=versal,...". Throws ParseError.
PhiSpec phi_spec_parse(std::string_view text);

/// Resolves against the tree's components. Component keys are written in the
/// user's numbering, i.e. internal label + label_offset. Throws DomainError on
/// unknown or missing components and on explicit lists for orange trees.
PhiAssignment resolve_phi(const PhiSpec& spec, const RedGreenPartition& p, int label_offset);

enum class Command : std::uint8_t { Color, Sets, Normalize, Count, Oracle, Verify, Census };
enum class OutputFormat : std::uint8_t { Pretty, Json, Factored };

/// Exit statuses of run().
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitGuard = 3,
  kExitMismatch = 4,
  kExitInvariant = 5,
};

struct TreeInput {
  std::optional<std::string> graph6;
  std::optional<std::string> edge_file;  // "-" reads stdin
  int edge_base = -1;                    // -1: detect
  std::optional<char> family;            // 'A', 'D' or 'E'
  int family_n = 0;

  bool present() const { return graph6 || edge_file || family; }
};

struct JobSpec {
  Command command = Command::Color;
  TreeInput input;
  std::optional<std::string> phi;
  OutputFormat format = OutputFormat::Pretty;
  bool json = false;
  std::optional<std::uint64_t> seed;
  bool force = false;
  std::optional<int> max_n;

  // sets
  bool matchings = false;
  bool independent = false;
  bool admissible = false;
  bool count_only = false;

  // oracle / verify
  std::uint32_t q = 5;
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  OracleEngine engine = OracleEngine::Transfer;

  // census
  int census_n = 0;
  CensusClass census_class = CensusClass::Orange;
  CensusParallelism parallelism = CensusParallelism::PerWorkerMemo;
  bool list_collisions = false;
};

struct JobReport {
  int exit_code = kExitOk;
  nlohmann::json json;  // always filled; "generated_at" is the only volatile field
  std::string text;     // human-readable rendering
};

/// Runs one job. Never throws for bad input: errors become exit codes and an
/// "error" object in the report.
JobReport run(const JobSpec& job);

std::optional<Command> parse_command(std::string_view name);
std::string_view to_string(Command c);

}  // namespace treecount
