#include "fda/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "fda/constants.hpp"
#include "fda/csv.hpp"
#include "fda/design.hpp"
#include "fda/errors.hpp"

namespace fda {

namespace {

using nlohmann::json;

SweepAxis parse_axis_name(const std::string& name) {
  if (name == "time") return SweepAxis::Time;
  if (name == "range") return SweepAxis::Range;
  if (name == "angle") return SweepAxis::Angle;
  throw ValidationError("axes: unknown axis name \"" + name +
                        "\" (expected time, range, or angle)");
}

AxisSpec parse_axis(const json& j) {
  const std::string name = j.at("name").get<std::string>();
  const SweepAxis axis = parse_axis_name(name);
  double start = j.at("start").get<double>();
  double stop = j.at("stop").get<double>();
  const int count = j.at("count").get<int>();
  if (axis == SweepAxis::Angle) {
    start = deg_to_rad(start);
    stop = deg_to_rad(stop);
  }
  return AxisSpec::linspace(axis, start, stop, count);
}

double parse_spacing(const json& j, double carrier_hz) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if (text == "half_wavelength") {
      return ArrayConfig::half_wavelength(carrier_hz);
    }
    throw ValidationError("spacing_m: unknown keyword \"" + text +
                          "\" (expected a number or \"half_wavelength\")");
  }
  return j.get<double>();
}

Scenario parse_json(const json& root, const std::filesystem::path& base_dir) {
  const std::string schema = root.at("schema").get<std::string>();
  if (schema != scenario_schema) {
    throw ValidationError("schema: expected \"" +
                          std::string(scenario_schema) + "\", got \"" +
                          schema + "\"");
  }

  Scenario scenario;

  const json& array = root.at("array");
  scenario.array.m_antennas = array.at("m_antennas").get<int>();
  scenario.array.carrier_hz = array.at("carrier_hz").get<double>();
  scenario.array.spacing_m =
      parse_spacing(array.at("spacing_m"), scenario.array.carrier_hz);
  scenario.array.offset_hz = array.at("offset_hz").get<double>();
  scenario.array.pulse_s = array.at("pulse_s").get<double>();
  scenario.array.initial_phase_rad =
      deg_to_rad(array.value("initial_phase_deg", 0.0));
  if (array.contains("weights_file")) {
    const std::filesystem::path ref =
        array.at("weights_file").get<std::string>();
    scenario.array.weights =
        load_weights(ref.is_absolute() ? ref : base_dir / ref);
  } else {
    scenario.array.weights = progressive_weights(
        scenario.array.m_antennas, scenario.array.initial_phase_rad);
  }
  scenario.array.validate();

  const json& target = root.at("target");
  scenario.target.range_m = target.at("range_m").get<double>();
  scenario.target.angle_rad = deg_to_rad(target.at("angle_deg").get<double>());
  scenario.target.validate();

  if (root.contains("design")) {
    const json& design = root.at("design");
    DesignSpec spec;
    spec.grid_size = design.at("grid_size").get<int>();
    for (const json& region : design.at("regions_deg")) {
      if (!region.is_array() || region.size() != 2) {
        throw ValidationError(
            "regions_deg: each region must be a [lo, hi] pair");
      }
      spec.regions_deg.emplace_back(region[0].get<double>(),
                                    region[1].get<double>());
    }
    // Full region/grid validation, result discarded.
    region_mask(spec.regions_deg, spec.grid_size);
    scenario.design = std::move(spec);
  }

  if (root.contains("sweep")) {
    const json& sweep = root.at("sweep");
    if (sweep.contains("axes")) {
      for (const json& axis : sweep.at("axes")) {
        scenario.sweep.axes.push_back(parse_axis(axis));
      }
    }
    const std::string model = sweep.value("model", "exact");
    if (model == "exact") {
      scenario.sweep.model = Model::Exact;
    } else if (model == "compact") {
      scenario.sweep.model = Model::Compact;
    } else {
      throw ValidationError("model: expected \"exact\" or \"compact\", got \"" +
                            model + "\"");
    }
    scenario.sweep.continuous_wave = sweep.value("continuous_wave", false);
    if (sweep.contains("time_s")) {
      scenario.sweep.fixed_time_s = sweep.at("time_s").get<double>();
    }
    if (sweep.contains("times_s")) {
      for (const json& t : sweep.at("times_s")) {
        scenario.sweep.times_s.push_back(t.get<double>());
      }
    }
  }
  if (scenario.sweep.axes.empty()) {
    scenario.sweep.axes.push_back(AxisSpec::linspace(
        SweepAxis::Angle, -pi / 2.0, pi / 2.0, 721));
  }

  const json& output = root.at("output");
  scenario.output.stem = output.at("stem").get<std::string>();
  if (scenario.output.stem.empty()) {
    throw ValidationError("stem: must not be empty");
  }
  if (output.contains("formats")) {
    scenario.output.formats.clear();
    for (const json& fmt : output.at("formats")) {
      scenario.output.formats.push_back(fmt.get<std::string>());
    }
  }
  for (const std::string& fmt : scenario.output.formats) {
    if (fmt != "csv") {
      throw ValidationError("formats: unsupported format \"" + fmt +
                            "\" (only csv)");
    }
  }
  scenario.output.plot_script = output.value("plot_script", false);
  scenario.output.components = output.value("components", false);

  return scenario;
}

}  // namespace

Scenario Scenario::parse(const std::string& json_text,
                         const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scenario: JSON parse error: ") +
                          e.what());
  }
  try {
    return parse_json(root, base_dir);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("scenario: ") + e.what());
  }
}

Scenario Scenario::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open scenario file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read scenario file: " + path.string());
  }
  return parse(buffer.str(), path.parent_path());
}

void save_weights(const std::filesystem::path& path,
                  const std::vector<std::complex<double>>& weights) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open weights file for writing: " + path.string());
  }
  out << "# fda-beam weights v1\n";
  out << "# index re im\n";
  for (std::size_t m = 0; m < weights.size(); ++m) {
    out << m << ' ' << format_exact(weights[m].real()) << ' '
        << format_exact(weights[m].imag()) << '\n';
  }
  if (!out) {
    throw IoError("failed writing weights file: " + path.string());
  }
}

std::vector<std::complex<double>> load_weights(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open weights file: " + path.string());
  }
  std::vector<std::pair<std::size_t, std::complex<double>>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    long long index = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(fields >> index)) {
      continue;  // blank or comment-only line
    }
    if (!(fields >> re >> im) || index < 0) {
      throw ValidationError("weights_file: malformed line " +
                            std::to_string(line_no) + " in " + path.string());
    }
    rows.emplace_back(static_cast<std::size_t>(index),
                      std::complex<double>{re, im});
  }
  std::vector<std::complex<double>> weights(rows.size());
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [index, value] : rows) {
    if (index >= weights.size() || seen[index]) {
      throw ValidationError(
          "weights_file: indices must cover 0..N-1 exactly once in " +
          path.string());
    }
    weights[index] = value;
    seen[index] = true;
  }
  if (weights.empty()) {
    throw ValidationError("weights_file: no weight rows in " + path.string());
  }
  return weights;
}

}  // namespace fda
