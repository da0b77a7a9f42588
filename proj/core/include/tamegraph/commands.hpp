#pragma once

#include <string>

#include "tamegraph/config.hpp"
#include "tamegraph/report.hpp"

namespace tamegraph {

// exit_code 0: clean; 1: a validation violation or a mathematical
// obstruction the command is reporting.
struct CommandResult {
  int exit_code = 0;
  Report report;
};

CommandResult cmd_analyze(const JobConfig& cfg);
CommandResult cmd_entropy(const JobConfig& cfg);
CommandResult cmd_eigen(const JobConfig& cfg);
CommandResult cmd_slope_model(const JobConfig& cfg);
CommandResult cmd_horseshoe(const JobConfig& cfg);

// Dispatches by name, renders, writes to cfg.out (stdout when empty).
// Returns the exit code; obstructions map to 1, config mistakes to 2.
int run_command(const std::string& name, const JobConfig& cfg);

}  // namespace tamegraph
