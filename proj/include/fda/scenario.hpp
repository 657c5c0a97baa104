#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fda/config.hpp"
#include "fda/sweep.hpp"

namespace fda {

// On-disk run description.  JSON object with a mandatory schema tag
// "fda-scenario-v1"; angles cross the file boundary in degrees, times in
// seconds, ranges in meters.  See README.md for the full key reference.
struct DesignSpec {
  std::vector<std::pair<double, double>> regions_deg;
  int grid_size = 0;  // K
};

struct SweepSpec {
  std::vector<AxisSpec> axes;          // angle values stored in radians
  Model model = Model::Exact;
  bool continuous_wave = false;
  std::optional<double> fixed_time_s;  // default: t_o of the target
  std::vector<double> times_s;         // extra instants for design patterns
};

struct OutputSpec {
  std::string stem;
  std::vector<std::string> formats{"csv"};
  bool plot_script = false;
  bool components = false;  // emit P1/P2 columns from the average command
};

struct Scenario {
  ArrayConfig array;
  Target target;
  std::optional<DesignSpec> design;
  SweepSpec sweep;
  OutputSpec output;

  // Parses and validates; throws ValidationError (bad content) or IoError
  // (unreadable file).  A weights_file reference is resolved relative to the
  // scenario's directory and loaded into array.weights.
  static Scenario load(const std::filesystem::path& path);

  // Same, from an in-memory JSON string (base_dir resolves weights_file).
  static Scenario parse(const std::string& json_text,
                        const std::filesystem::path& base_dir);
};

// Weights file: '#' comment lines, then "index re im" per line, rendered with
// enough digits that read-back reproduces the doubles bit-exactly.
void save_weights(const std::filesystem::path& path,
                  const std::vector<std::complex<double>>& weights);
std::vector<std::complex<double>> load_weights(
    const std::filesystem::path& path);

inline constexpr const char* scenario_schema = "fda-scenario-v1";

}  // namespace fda
