#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rodsim/config.hpp"

namespace rodsim {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3 };

struct CommandOptions {
  std::string config_path;
  std::string out_dir = "out";
  int level_lo = 0;
  int level_hi = 0;
  bool renormalize_frame = false;
  std::optional<std::string> restart_dir;  // run only: continue from a snapshot
  long restart_step = 0;
};

/// Applies command-line overrides to a parsed config.
void apply_overrides(RunConfig& rc, const CommandOptions& opts);

int cmd_run(const CommandOptions& opts, std::ostream& log);
int cmd_converge(const CommandOptions& opts, std::ostream& log);
int cmd_compare2d3d(const CommandOptions& opts, std::ostream& log);

/// One row of the convergence table.
struct ConvergenceRow {
  int level = 0;
  double dt = 0.0;
  int n_vertices = 0;
  double max_f1 = 0.0;
  std::optional<double> eoc;
  double max_f2 = 0.0;
  double max_df2 = 0.0;
};

/// Summary of one run's diagnostics.
struct RunSummary {
  double max_f1 = 0.0;
  double max_f2 = 0.0;
  double max_df2 = 0.0;
};

RunSummary summarize(const std::vector<DiagnosticsRecord>& records);

std::vector<ConvergenceRow> convergence_table(const std::vector<ConvergenceRow>& rows);

}  // namespace rodsim
