#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "tamegraph/commands.hpp"
#include "tamegraph/config.hpp"

namespace {

struct Overrides {
  std::string config_path;
  bool exact = false;
  std::optional<double> tol;
  std::optional<int> depth;
  std::optional<int> horizon;
  std::optional<long> budget;
  std::optional<double> epsilon;
  std::optional<int> count;
  std::optional<std::string> lambda;
  std::optional<std::string> base_arc;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> builtin;
  std::optional<int> param;
};

void add_common_flags(CLI::App* cmd, Overrides& ov) {
  cmd->add_option("--config", ov.config_path, "Job config file");
  cmd->add_option("--builtin", ov.builtin, "Builtin family (instead of a config file)");
  cmd->add_option("--param", ov.param, "Builtin family parameter");
  cmd->add_flag("--exact", ov.exact, "Exact rational arithmetic");
  cmd->add_option("--tol", ov.tol, "Comparison tolerance");
  cmd->add_option("--depth", ov.depth, "Truncation depth");
  cmd->add_option("--horizon", ov.horizon, "Iteration horizon");
  cmd->add_option("--budget", ov.budget, "Enumeration budget");
  cmd->add_option("--epsilon", ov.epsilon, "Entropy slack");
  cmd->add_option("--count", ov.count, "Row count for sequence commands");
  cmd->add_option("--lambda", ov.lambda, "Slope value (rational or decimal text)");
  cmd->add_option("--base-arc", ov.base_arc, "Base arc label");
  cmd->add_option("--format", ov.format, "Output format: csv or tree")
      ->check(CLI::IsMember({"csv", "tree"}));
  cmd->add_option("--out", ov.out, "Output path (default stdout)");
}

// Flags override config fields; a builtin flag replaces the map source.
tamegraph::JobConfig merge(const Overrides& ov) {
  tamegraph::JobConfig cfg;
  if (!ov.config_path.empty()) cfg = tamegraph::load_config(ov.config_path);
  if (ov.builtin) {
    cfg.graph.reset();
    cfg.builtin = tamegraph::BuiltinSpec{*ov.builtin, ov.param.value_or(0)};
  }
  if (!cfg.builtin && !cfg.graph)
    throw std::invalid_argument("no map source: pass --config or --builtin");
  if (ov.exact) cfg.exact = true;
  if (ov.tol) cfg.tol = *ov.tol;
  if (ov.depth) cfg.depth = *ov.depth;
  if (ov.horizon) cfg.horizon = *ov.horizon;
  if (ov.budget) cfg.budget = *ov.budget;
  if (ov.epsilon) cfg.epsilon = *ov.epsilon;
  if (ov.count) cfg.count = *ov.count;
  if (ov.lambda) cfg.lambda = *ov.lambda;
  if (ov.base_arc) cfg.base_arc = *ov.base_arc;
  if (ov.format) cfg.format = *ov.format;
  if (ov.out) cfg.out = *ov.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Countable Markov transition analysis over graph maps"};
  app.require_subcommand(1);

  Overrides ov;
  const char* names[] = {"analyze", "entropy", "eigen", "slope-model", "horseshoe"};
  const char* blurbs[] = {
      "Validate the system and summarize its transition matrix",
      "Truncation schedule of entropy lower bounds",
      "Eigenvector residual report",
      "Piecewise-affine model lengths and slopes",
      "Loop counts and entropy bounds through a base arc",
  };
  for (int k = 0; k < 5; ++k) add_common_flags(app.add_subcommand(names[k], blurbs[k]), ov);

  CLI11_PARSE(app, argc, argv);

  try {
    tamegraph::JobConfig cfg = merge(ov);
    return tamegraph::run_command(app.get_subcommands().front()->get_name(), cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
