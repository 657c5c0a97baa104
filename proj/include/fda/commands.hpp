#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "fda/scenario.hpp"

namespace fda {

// Process exit codes shared by the command runners and the CLI front end.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 2;  // scenario or config invariant violated
inline constexpr int io = 3;          // unreadable input or unwritable output
inline constexpr int bound = 4;       // f_o*T bound violated under --strict
}  // namespace exit_code

struct CommandOptions {
  std::string scenario_path;
  std::optional<std::string> out_stem;       // overrides output.stem
  std::optional<Model> model_override;       // overrides sweep.model
  std::optional<bool> continuous_wave;       // overrides sweep.continuous_wave
  bool strict = false;  // treat a violated f_o*T bound as an error
};

// Each runner loads and validates the scenario, prints the f_o*T verdict and
// a result summary to log, writes its output files, and returns an exit code.
// No output file is written before validation passes.
int run_pattern(const CommandOptions& options, std::ostream& log);
int run_design(const CommandOptions& options, std::ostream& log);
int run_average(const CommandOptions& options, std::ostream& log);
int run_compare(const CommandOptions& options, std::ostream& log);

}  // namespace fda
