#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "fda/commands.hpp"

using namespace fda;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() /
           ("fda_commands_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  REQUIRE(bool(out));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(bool(in));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    lines.push_back(line);
  }
  return lines;
}

// Scenario with a small angle sweep; %1% is the output stem.
std::string pattern_scenario(const std::string& stem,
                             double offset_hz = 100.0) {
  std::ostringstream out;
  out << R"({
  "schema": "fda-scenario-v1",
  "array": {
    "m_antennas": 12,
    "carrier_hz": 1e10,
    "spacing_m": "half_wavelength",
    "offset_hz": )"
      << offset_hz << R"(,
    "pulse_s": 1e-3
  },
  "target": {"range_m": 3e5, "angle_deg": 0.0},
  "sweep": {
    "axes": [{"name": "angle", "start": -90.0, "stop": 90.0, "count": 181}]
  },
  "output": {"stem": ")"
      << stem << R"("}
})";
  return out.str();
}

}  // namespace

TEST_CASE("pattern run writes a labeled grid and reports the verdict") {
  const TempDir dir("pattern");
  const fs::path scenario = dir.path / "scenario.json";
  write_file(scenario, pattern_scenario((dir.path / "run").string()));

  CommandOptions options;
  options.scenario_path = scenario.string();
  std::ostringstream log;
  const int code = run_pattern(options, log);
  CHECK(code == exit_code::ok);
  CHECK(log.str().find("f_o*T = 0.1 -> VALID") != std::string::npos);
  CHECK(log.str().find("peak:") != std::string::npos);

  const std::vector<std::string> lines =
      lines_of(read_file(dir.path / "run.csv"));
  REQUIRE(lines.size() == 2 + 181);  // banner, header, one row per angle
  CHECK(lines[0] == "# fda-beam v1");
  CHECK(lines[1] == "angle_deg,power_lin,power_db");
  CHECK(lines[2].rfind("-90,", 0) == 0);
}

TEST_CASE("the output stem can be overridden from the command line") {
  const TempDir dir("stem");
  const fs::path scenario = dir.path / "scenario.json";
  write_file(scenario, pattern_scenario((dir.path / "ignored").string()));

  CommandOptions options;
  options.scenario_path = scenario.string();
  options.out_stem = (dir.path / "nested" / "deep" / "out").string();
  std::ostringstream log;
  CHECK(run_pattern(options, log) == exit_code::ok);
  CHECK(fs::exists(dir.path / "nested" / "deep" / "out.csv"));
  CHECK_FALSE(fs::exists(dir.path / "ignored.csv"));
}

TEST_CASE("repeated runs are byte-identical") {
  const TempDir dir("determinism");
  const fs::path scenario = dir.path / "scenario.json";
  write_file(scenario, pattern_scenario((dir.path / "a").string()));

  CommandOptions options;
  options.scenario_path = scenario.string();
  std::ostringstream log_a;
  REQUIRE(run_pattern(options, log_a) == exit_code::ok);
  const std::string first = read_file(dir.path / "a.csv");

  options.out_stem = (dir.path / "b").string();
  std::ostringstream log_b;
  REQUIRE(run_pattern(options, log_b) == exit_code::ok);
  CHECK(first == read_file(dir.path / "b.csv"));
}

TEST_CASE("failure exit codes distinguish validation from i/o") {
  CommandOptions options;
  std::ostringstream log;

  options.scenario_path = "/nonexistent/scenario.json";
  CHECK(run_pattern(options, log) == exit_code::io);

  const TempDir dir("badinput");
  const fs::path bad = dir.path / "bad.json";
  write_file(bad, "{\"schema\": \"fda-scenario-v1\"}");
  options.scenario_path = bad.string();
  CHECK(run_pattern(options, log) == exit_code::validation);
  CHECK(run_average(options, log) == exit_code::validation);
  CHECK(run_design(options, log) == exit_code::validation);
  CHECK(run_compare(options, log) == exit_code::validation);
}

TEST_CASE("design and compare require a design block") {
  const TempDir dir("nodesign");
  const fs::path scenario = dir.path / "scenario.json";
  write_file(scenario, pattern_scenario((dir.path / "run").string()));
  CommandOptions options;
  options.scenario_path = scenario.string();
  std::ostringstream log;
  CHECK(run_design(options, log) == exit_code::validation);
  CHECK(run_compare(options, log) == exit_code::validation);
  CHECK(log.str().find("design") != std::string::npos);
}

TEST_CASE("a violated offset-time bound fails only under --strict") {
  const TempDir dir("bound");
  const fs::path scenario = dir.path / "scenario.json";
  // f_o T = 2.0, far beyond the bound.
  write_file(scenario,
             pattern_scenario((dir.path / "run").string(), 2000.0));

  CommandOptions options;
  options.scenario_path = scenario.string();
  std::ostringstream relaxed;
  CHECK(run_pattern(options, relaxed) == exit_code::ok);
  CHECK(relaxed.str().find("VIOLATED") != std::string::npos);
  CHECK(fs::exists(dir.path / "run.csv"));

  fs::remove(dir.path / "run.csv");
  options.strict = true;
  std::ostringstream strict;
  CHECK(run_pattern(options, strict) == exit_code::bound);
  CHECK(strict.str().find("VIOLATED") != std::string::npos);
  // Nothing is written when the bound check aborts the run.
  CHECK_FALSE(fs::exists(dir.path / "run.csv"));
}

TEST_CASE("designed weights re-ingested through a scenario reproduce the run") {
  const TempDir dir("reingest");
  const std::string stem = (dir.path / "design").string();
  const double t_eval = 1.5e-3;

  std::ostringstream design_json;
  design_json << R"({
  "schema": "fda-scenario-v1",
  "array": {
    "m_antennas": 16,
    "carrier_hz": 1e10,
    "spacing_m": "half_wavelength",
    "offset_hz": 100.0,
    "pulse_s": 1e-3
  },
  "target": {"range_m": 3e5, "angle_deg": 0.0},
  "design": {"regions_deg": [[-25.0, 10.0]], "grid_size": 128},
  "sweep": {
    "axes": [{"name": "angle", "start": -90.0, "stop": 90.0, "count": 121}],
    "continuous_wave": true,
    "times_s": [)"
              << t_eval << R"(]
  },
  "output": {"stem": ")"
              << stem << R"("}
})";
  const fs::path design_file = dir.path / "design.json";
  write_file(design_file, design_json.str());

  CommandOptions options;
  options.scenario_path = design_file.string();
  std::ostringstream design_log;
  REQUIRE(run_design(options, design_log) == exit_code::ok);
  REQUIRE(fs::exists(dir.path / "design_weights.txt"));

  // Pattern scenario that loads the weights file the design run saved.
  std::ostringstream pattern_json;
  pattern_json << R"({
  "schema": "fda-scenario-v1",
  "array": {
    "m_antennas": 16,
    "carrier_hz": 1e10,
    "spacing_m": "half_wavelength",
    "offset_hz": 100.0,
    "pulse_s": 1e-3,
    "weights_file": "design_weights.txt"
  },
  "target": {"range_m": 3e5, "angle_deg": 0.0},
  "sweep": {
    "axes": [{"name": "angle", "start": -90.0, "stop": 90.0, "count": 121}],
    "model": "compact",
    "continuous_wave": true,
    "time_s": )"
               << t_eval << R"(
  },
  "output": {"stem": ")"
               << (dir.path / "replay").string() << R"("}
})";
  const fs::path pattern_file = dir.path / "pattern.json";
  write_file(pattern_file, pattern_json.str());

  options.scenario_path = pattern_file.string();
  std::ostringstream pattern_log;
  REQUIRE(run_pattern(options, pattern_log) == exit_code::ok);

  // The design CSV rows at t_eval carry time and angle columns; the replay
  // rows carry angle only.  The power columns must match byte for byte.
  const std::vector<std::string> design_lines =
      lines_of(read_file(dir.path / "design.csv"));
  const std::vector<std::string> replay_lines =
      lines_of(read_file(dir.path / "replay.csv"));
  REQUIRE(design_lines.size() == 2 + 121);
  REQUIRE(replay_lines.size() == 2 + 121);
  CHECK(design_lines[1] == "time_s,angle_deg,power_lin,power_db");
  for (std::size_t i = 2; i < design_lines.size(); ++i) {
    const std::string& design_row = design_lines[i];
    const std::string& replay_row = replay_lines[i];
    const auto cut = design_row.find(',');
    REQUIRE(cut != std::string::npos);
    CHECK(design_row.substr(cut + 1) == replay_row);
  }
}

TEST_CASE("average run emits closed-form edge predictions") {
  const TempDir dir("average");
  const fs::path scenario = dir.path / "scenario.json";
  write_file(scenario, pattern_scenario((dir.path / "avg").string(), 200.0));

  CommandOptions options;
  options.scenario_path = scenario.string();
  std::ostringstream log;
  CHECK(run_average(options, log) == exit_code::ok);
  CHECK(log.str().find("sin-domain edges") != std::string::npos);
  CHECK(log.str().find("spatial extent (approx) = 0.4") != std::string::npos);
  const std::vector<std::string> lines =
      lines_of(read_file(dir.path / "avg.csv"));
  REQUIRE(lines.size() == 2 + 181);
  CHECK(lines[1] == "angle_deg,power_lin,power_db");
}

TEST_CASE("compare run writes one grid per transmission scheme") {
  const TempDir dir("compare");
  const fs::path scenario = dir.path / "scenario.json";
  std::ostringstream json;
  json << R"({
  "schema": "fda-scenario-v1",
  "array": {
    "m_antennas": 8,
    "carrier_hz": 1e10,
    "spacing_m": "half_wavelength",
    "offset_hz": 1000.0,
    "pulse_s": 1e-4
  },
  "target": {"range_m": 3e5, "angle_deg": 0.0},
  "design": {"regions_deg": [[-15.0, 15.0]], "grid_size": 64},
  "sweep": {
    "axes": [
      {"name": "range", "start": 0.0, "stop": 6e5, "count": 41},
      {"name": "angle", "start": -90.0, "stop": 90.0, "count": 91}
    ]
  },
  "output": {"stem": ")"
       << (dir.path / "cmp").string() << R"("}
})";
  write_file(scenario, json.str());

  CommandOptions options;
  options.scenario_path = scenario.string();
  std::ostringstream log;
  CHECK(run_compare(options, log) == exit_code::ok);
  for (const char* suffix : {"_par.csv", "_fda.csv", "_dft.csv"}) {
    const fs::path file = dir.path / ("cmp" + std::string(suffix));
    CHECK(fs::exists(file));
    const std::vector<std::string> lines = lines_of(read_file(file));
    CHECK(lines.size() == 2 + 41 * 91);
    CHECK(lines[1] == "range_m,angle_deg,power_lin,power_db");
  }
  // The offset-bearing schemes report a measured range tilt.
  CHECK(log.str().find("peak tilt") != std::string::npos);
  CHECK(log.str().find("expected") != std::string::npos);
}
