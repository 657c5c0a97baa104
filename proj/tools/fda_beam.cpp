// Command-line front end for the frequency-diverse-array beampattern tools.

#include <functional>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fda/commands.hpp"

namespace {

// Shared flags for one subcommand; fills options and registers the runner.
void attach(CLI::App* sub, fda::CommandOptions& options, std::string& model,
            bool& continuous_wave, bool& pulsed) {
  sub->add_option("-s,--scenario", options.scenario_path,
                  "scenario file (JSON)")
      ->required();
  sub->add_option("-o,--out", options.out_stem,
                  "output stem; overrides the scenario's output.stem");
  sub->add_option("--format", "output format (only csv is supported)")
      ->check(CLI::IsMember({"csv"}));
  sub->add_option("--model", model, "signal model override")
      ->check(CLI::IsMember({"exact", "compact"}));
  sub->add_flag("--continuous-wave", continuous_wave,
                "disable pulse gating (continuous transmission)");
  sub->add_flag("--pulsed", pulsed,
                "force pulse gating even where the command defaults to "
                "continuous transmission");
  sub->add_flag("--strict", options.strict,
                "exit with an error when the offset-time bound is violated");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequency-diverse-array beampattern analysis and design"};
  app.require_subcommand(1);

  fda::CommandOptions options;
  std::string model;
  bool continuous_wave = false;
  bool pulsed = false;

  using Runner = int (*)(const fda::CommandOptions&, std::ostream&);
  std::map<std::string, Runner> runners = {
      {"pattern", &fda::run_pattern},
      {"design", &fda::run_design},
      {"average", &fda::run_average},
      {"compare", &fda::run_compare},
  };

  CLI::App* pattern = app.add_subcommand(
      "pattern", "sweep the instantaneous transmit beampattern");
  CLI::App* design = app.add_subcommand(
      "design", "synthesize weights for desired coverage regions");
  CLI::App* average = app.add_subcommand(
      "average", "pulse-averaged beampattern and spatial extent");
  CLI::App* compare = app.add_subcommand(
      "compare", "phased-array / progressive / designed scheme comparison");
  for (CLI::App* sub : {pattern, design, average, compare}) {
    attach(sub, options, model, continuous_wave, pulsed);
  }

  CLI11_PARSE(app, argc, argv);

  if (model == "exact") {
    options.model_override = fda::Model::Exact;
  } else if (model == "compact") {
    options.model_override = fda::Model::Compact;
  }
  if (continuous_wave) {
    options.continuous_wave = true;
  } else if (pulsed) {
    options.continuous_wave = false;
  }

  const CLI::App* sub = app.get_subcommands().front();
  return runners.at(sub->get_name())(options, std::cout);
}
