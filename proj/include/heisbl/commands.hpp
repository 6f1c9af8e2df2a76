#pragma once

// The command layer behind the CLI and the C API: each command takes a parsed
// config plus options and returns the serialized report with an exit status.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heisbl/config.hpp"
#include "heisbl/measure.hpp"

namespace heisbl {

enum class ExitStatus : int { Ok = 0, UserError = 2, Infeasible = 3, BudgetExceeded = 4 };

struct CommandOptions {
  std::optional<Mode> mode;
  /// "", "coords", "heuristic" or "file:PATH".
  std::string family;
  PairPolicy pairs = PairPolicy::Complement;
  int depth = 2;

  double ladder_r0 = 8;
  double ladder_factor = 2;
  int ladder_count = 5;
  double grid_h = 1.0 / 64;
  /// Grid cells per estimate (witness) or samples (montecarlo); command default when unset.
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  /// "", "json", "csv" or "svg"; "" picks the command's default.
  std::string format;

  /// Comma-separated q (or p) lists.
  std::string q;
  std::string p;
  std::string condition = "A1";
  std::string v;
  std::string w;
  int dilations = 4;
  /// 1-based; unset plots q_1 against q_{m+1}.
  std::optional<std::pair<int, int>> slice;
};

struct CommandResult {
  ExitStatus status = ExitStatus::Ok;
  std::string output;
  /// Human-readable note for stderr (empty when there is nothing to say).
  std::string message;
};

/// The subspace family selected by options.family (see CommandOptions).
std::vector<Subspace> resolve_family(const RunConfig& config, const CommandOptions& options);

// Each command throws InvalidInput for user errors; infeasibility and budget
// overruns are reported through CommandResult::status with a full report.
CommandResult run_polytope(const RunConfig& config, const CommandOptions& options);
CommandResult run_check(const RunConfig& config, const CommandOptions& options);
CommandResult run_witness(const RunConfig& config, const CommandOptions& options);
CommandResult run_frames(const RunConfig& config, const CommandOptions& options);
CommandResult run_montecarlo(const RunConfig& config, const CommandOptions& options);
/// Inputs are the texts of polytope reports or config files (a config is
/// expanded into its sufficient and necessary polytopes, or just --mode).
CommandResult run_plot(const std::vector<std::string>& inputs, const CommandOptions& options);

/// Schema problems of a JSON report (empty when valid).
std::vector<std::string> validate_report(const std::string& text);

}  // namespace heisbl
