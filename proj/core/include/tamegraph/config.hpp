#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamegraph/graph_model.hpp"

namespace tamegraph {

struct BuiltinSpec {
  std::string family;
  int param = 0;
};

struct ExplicitGraphSpec {
  std::vector<std::string> vertices;
  std::vector<ExplicitSystem::ArcSpec> arcs;
  std::vector<std::pair<std::string, std::vector<ExplicitSystem::StepSpec>>> map;
};

// One job: one map source plus the numeric and output knobs the commands
// read.  Exactly one of builtin / graph may be set.
struct JobConfig {
  std::optional<BuiltinSpec> builtin;
  std::optional<ExplicitGraphSpec> graph;

  bool exact = false;
  double tol = 1e-9;
  int depth = 8;
  int horizon = 40;
  long budget = 1 << 20;
  double epsilon = 0.1;
  int count = 40;        // row count for sequence commands
  int probe_levels = 30; // refinement depth of the limit-cylinder probe
  std::string lambda;    // rational or decimal text; empty picks the family value
  std::string base_arc;  // empty picks the first enumerated arc
  std::string format = "csv";  // "csv" | "tree"
  std::string out;             // empty writes to stdout
};

// Schema:
//   system:
//     builtin: {family: NAME, param: N}            (or just "builtin: NAME")
//   or
//   system:
//     vertices: [labels]
//     arcs: [{id, from, to}, ...]
//     map: {arc-id: [{arc: ID, dir: fwd|rev}, ...], ...}
//   job:
//     exact, tol, depth, horizon, budget, epsilon, count, probe_levels,
//     lambda, base_arc, format, out
// Unknown keys and schema violations throw std::invalid_argument naming the
// offending key.
JobConfig parse_config(const std::string& text);
JobConfig load_config(const std::string& path);

std::shared_ptr<MapSystem> build_system(const JobConfig& cfg);

}  // namespace tamegraph
