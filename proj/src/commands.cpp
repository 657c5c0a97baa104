#include "fda/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <vector>

#include "fda/analysis.hpp"
#include "fda/constants.hpp"
#include "fda/csv.hpp"
#include "fda/design.hpp"
#include "fda/errors.hpp"
#include "fda/timing.hpp"

namespace fda {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create output directory: " +
                    path.parent_path().string());
    }
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open output file for writing: " + path.string());
  }
  return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) {
    throw IoError("failed writing output file: " + path.string());
  }
}

struct Run {
  Scenario scenario;
  Model model = Model::Exact;
  bool continuous_wave = false;
  std::string stem;
  double t_o = 0.0;         // propagation delay of the scenario target
  double fixed_time = 0.0;  // evaluation instant for non-time-swept grids
};

Run prepare(const CommandOptions& options, bool continuous_wave_default) {
  Run run;
  run.scenario = Scenario::load(options.scenario_path);
  run.model = options.model_override.value_or(run.scenario.sweep.model);
  run.continuous_wave = options.continuous_wave.value_or(
      continuous_wave_default || run.scenario.sweep.continuous_wave);
  run.stem = options.out_stem.value_or(run.scenario.output.stem);
  if (run.stem.empty()) {
    throw ValidationError("stem: must not be empty");
  }
  run.t_o = propagation_delay(run.scenario.target);
  run.fixed_time = run.scenario.sweep.fixed_time_s.value_or(run.t_o);
  return run;
}

// Prints the automatic f_o*T verdict; returns the exit code to use (0, or 4
// when the bound is violated under --strict).
int report_bound(const Run& run, const CommandOptions& options,
                 std::ostream& log) {
  const ArrayConfig& cfg = run.scenario.array;
  const FotVerdict verdict = check_fot_bound(cfg);
  log << "f_o*T = " << format_value(cfg.offset_hz * cfg.pulse_s) << " -> "
      << to_string(verdict) << '\n';
  if (verdict == FotVerdict::Violated && options.strict) {
    log << "aborting: offset-time bound violated and --strict is set\n";
    return exit_code::bound;
  }
  return exit_code::ok;
}

int guard(std::ostream& log, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    log << "validation error: " << e.what() << '\n';
    return exit_code::validation;
  } catch (const IoError& e) {
    log << "i/o error: " << e.what() << '\n';
    return exit_code::io;
  } catch (const std::domain_error& e) {
    log << "validation error: " << e.what() << '\n';
    return exit_code::validation;
  } catch (const std::out_of_range& e) {
    log << "validation error: " << e.what() << '\n';
    return exit_code::validation;
  }
}

const AxisSpec* find_axis(const std::vector<AxisSpec>& axes, SweepAxis kind) {
  for (const AxisSpec& axis : axes) {
    if (axis.axis == kind) {
      return &axis;
    }
  }
  return nullptr;
}

AxisSpec default_angle_axis() {
  return AxisSpec::linspace(SweepAxis::Angle, -pi / 2.0, pi / 2.0, 721);
}

void report_peak(const BeamGrid& grid, std::ostream& log) {
  const auto it = std::max_element(grid.power.begin(), grid.power.end());
  const std::size_t flat = static_cast<std::size_t>(it - grid.power.begin());
  const std::size_t row = flat / grid.cols();
  const std::size_t col = flat % grid.cols();
  log << "peak: power_lin = " << format_value(*it) << " ("
      << format_value(power_db(*it, grid.config.m_antennas)) << " dB re M^2)";
  const auto describe = [&log](const AxisSpec& axis, double raw) {
    if (axis.axis == SweepAxis::Angle) {
      log << " at angle_deg = " << format_value(rad_to_deg(raw));
    } else if (axis.axis == SweepAxis::Range) {
      log << " at range_m = " << format_value(raw);
    } else {
      log << " at time_s = " << format_value(raw);
    }
  };
  describe(grid.axes[0], grid.axes[0].values[row]);
  if (grid.axes.size() == 2) {
    describe(grid.axes[1], grid.axes[1].values[col]);
  }
  log << '\n';
}

// Peak-to-first-null width measured along the angle axis through the peak.
void report_beamwidth(const BeamGrid& grid, std::ostream& log) {
  const AxisSpec* angle = find_axis(grid.axes, SweepAxis::Angle);
  if (angle == nullptr || angle->values.size() < 3) {
    return;
  }
  std::vector<double> slice;
  if (grid.axes.size() == 1) {
    slice = grid.power;
  } else {
    // Cut along the angle axis at the other axis's peak row/column.
    const auto it = std::max_element(grid.power.begin(), grid.power.end());
    const std::size_t flat = static_cast<std::size_t>(it - grid.power.begin());
    if (grid.axes[1].axis == SweepAxis::Angle) {
      const std::size_t row = flat / grid.cols();
      slice.reserve(grid.cols());
      for (std::size_t j = 0; j < grid.cols(); ++j) {
        slice.push_back(grid.at(row, j));
      }
    } else {
      const std::size_t col = flat % grid.cols();
      slice.reserve(grid.rows());
      for (std::size_t i = 0; i < grid.rows(); ++i) {
        slice.push_back(grid.at(i, col));
      }
    }
  }
  try {
    const double width = measure_peak_to_null(angle->values, slice);
    log << "measured beamwidth (peak to first null): " << format_value(width)
        << " rad\n";
  } catch (const std::exception&) {
    // No null on this grid (flat or truncated pattern); nothing to report.
  }
}

void report_states(const Run& run, std::ostream& log) {
  const ArrayConfig& cfg = run.scenario.array;
  const Target& target = run.scenario.target;
  const AxisSpec* time_axis = find_axis(run.scenario.sweep.axes, SweepAxis::Time);
  log << "target states (range_m = " << format_value(target.range_m)
      << ", angle_deg = " << format_value(rad_to_deg(target.angle_rad))
      << "):\n";
  const auto line = [&](double t, const BeamState& state) {
    log << "  t = " << format_value(t) << " s: " << to_string(state.kind)
        << " (" << state.active_antennas << " active, peak power bound "
        << format_value(peak_power_bound(cfg, target, t, run.continuous_wave))
        << ")\n";
  };
  if (time_axis == nullptr) {
    line(run.fixed_time, classify_state(cfg, target, run.fixed_time));
    return;
  }
  // Compress the time axis to state-change rows.
  bool have_last = false;
  BeamState last;
  for (const double t : time_axis->values) {
    const BeamState state = classify_state(cfg, target, t);
    if (!have_last || state.kind != last.kind ||
        state.active_antennas != last.active_antennas) {
      line(t, state);
      last = state;
      have_last = true;
    }
  }
}

void maybe_plot(const Run& run, const std::filesystem::path& csv_path,
                const BeamGrid& grid, std::ostream& log) {
  if (!run.scenario.output.plot_script) {
    return;
  }
  if (grid.axes.size() != 1) {
    log << "plot script omitted (only single-axis grids are plotted)\n";
    return;
  }
  const std::filesystem::path script = run.stem + ".gp";
  std::ofstream out = open_output(script);
  const char* label = grid.axes[0].axis == SweepAxis::Angle ? "angle_deg"
                      : grid.axes[0].axis == SweepAxis::Range ? "range_m"
                                                              : "time_s";
  write_plot_script(out, csv_path.filename().string(), label, 1, 3);
  finish_output(out, script);
  log << "wrote " << script.string() << '\n';
}

// Median slope of the peak location (in sin theta) against range, for grids
// with axes [range, angle].  Differences are wrapped to the sin-domain period
// of 2 so grating-lobe reentry does not corrupt the estimate.
std::optional<double> measure_tilt(const BeamGrid& grid) {
  if (grid.axes.size() != 2 || grid.axes[0].axis != SweepAxis::Range ||
      grid.axes[1].axis != SweepAxis::Angle || grid.rows() < 2) {
    return std::nullopt;
  }
  std::vector<double> peak_sin(grid.rows());
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < grid.cols(); ++j) {
      if (grid.at(i, j) > grid.at(i, best)) {
        best = j;
      }
    }
    peak_sin[i] = std::sin(grid.axes[1].values[best]);
  }
  std::vector<double> slopes;
  slopes.reserve(grid.rows() - 1);
  for (std::size_t i = 0; i + 1 < grid.rows(); ++i) {
    const double dr = grid.axes[0].values[i + 1] - grid.axes[0].values[i];
    double ds = peak_sin[i + 1] - peak_sin[i];
    ds -= 2.0 * std::floor(ds / 2.0 + 0.5);  // wrap to [-1, 1)
    slopes.push_back(ds / dr);
  }
  std::nth_element(slopes.begin(), slopes.begin() + slopes.size() / 2,
                   slopes.end());
  return slopes[slopes.size() / 2];
}

}  // namespace

int run_pattern(const CommandOptions& options, std::ostream& log) {
  return guard(log, [&]() -> int {
    Run run = prepare(options, /*continuous_wave_default=*/false);
    const int bound = report_bound(run, options, log);
    if (bound != exit_code::ok) {
      return bound;
    }

    const FixedPoint fixed{run.fixed_time, run.scenario.target.range_m,
                           run.scenario.target.angle_rad};
    const BeamGrid grid =
        sweep(run.scenario.array, run.scenario.sweep.axes, fixed, run.model,
              run.continuous_wave);

    const std::filesystem::path csv_path = run.stem + ".csv";
    std::ofstream out = open_output(csv_path);
    write_grid_csv(out, grid);
    finish_output(out, csv_path);
    log << "wrote " << csv_path.string() << '\n';

    report_peak(grid, log);
    report_beamwidth(grid, log);
    report_states(run, log);
    maybe_plot(run, csv_path, grid, log);
    return exit_code::ok;
  });
}

int run_design(const CommandOptions& options, std::ostream& log) {
  return guard(log, [&]() -> int {
    Run run = prepare(options, /*continuous_wave_default=*/false);
    if (!run.scenario.design) {
      throw ValidationError("design: block required for the design command");
    }
    const int bound = report_bound(run, options, log);
    if (bound != exit_code::ok) {
      return bound;
    }

    const DesignSpec& spec = *run.scenario.design;
    const DesiredPattern desired =
        region_mask(spec.regions_deg, spec.grid_size);
    const SynthesizedWeights synth =
        synthesize_weights(desired, run.scenario.array.m_antennas);
    log << "synthesized " << synth.weights.size()
        << " taps: fit residual (RMS |AF| deviation) = "
        << format_value(synth.residual)
        << ", achieved peak |AF| = " << format_value(synth.peak_af) << '\n';

    const std::filesystem::path weights_path = run.stem + "_weights.txt";
    if (weights_path.has_parent_path()) {
      std::error_code ec;
      std::filesystem::create_directories(weights_path.parent_path(), ec);
    }
    save_weights(weights_path, synth.weights);
    log << "wrote " << weights_path.string() << '\n';

    // Desired mask on its normalized-frequency grid.
    const std::filesystem::path desired_path = run.stem + "_desired.csv";
    std::ofstream desired_out = open_output(desired_path);
    desired_out << csv_banner << '\n' << "f_theta,angle_deg,mask\n";
    for (int k = 0; k < desired.grid_size; ++k) {
      const double f = DesiredPattern::ftheta_bin(k, desired.grid_size);
      desired_out << format_value(f) << ','
                  << format_value(rad_to_deg(std::asin(2.0 * f))) << ','
                  << format_value(desired.mask[static_cast<std::size_t>(k)])
                  << '\n';
    }
    finish_output(desired_out, desired_path);
    log << "wrote " << desired_path.string() << '\n';

    std::vector<double> times = run.scenario.sweep.times_s;
    if (times.empty()) {
      times = {run.t_o, 1.5 * run.t_o, 2.0 * run.t_o};
    }
    const AxisSpec* angle = find_axis(run.scenario.sweep.axes, SweepAxis::Angle);
    AxisSpec angle_axis = angle != nullptr ? *angle : default_angle_axis();

    AxisSpec time_axis;
    time_axis.axis = SweepAxis::Time;
    time_axis.values = times;

    ArrayConfig designed = run.scenario.array;
    designed.weights = synth.weights;
    const FixedPoint fixed{run.fixed_time, run.scenario.target.range_m,
                           run.scenario.target.angle_rad};
    const BeamGrid grid = sweep(designed, {time_axis, angle_axis}, fixed,
                                Model::Compact, run.continuous_wave);

    const std::filesystem::path csv_path = run.stem + ".csv";
    std::ofstream out = open_output(csv_path);
    write_grid_csv(out, grid);
    finish_output(out, csv_path);
    log << "wrote " << csv_path.string() << '\n';

    for (const double t : times) {
      const double shift = predict_shift(run.scenario.array, t, run.t_o);
      log << "t = " << format_value(t)
          << " s: predicted pattern shift delta_f_theta = "
          << format_value(shift) << " (wrapped "
          << format_value(wrap_ftheta(shift)) << ")\n";
    }
    maybe_plot(run, csv_path, grid, log);
    return exit_code::ok;
  });
}

int run_average(const CommandOptions& options, std::ostream& log) {
  return guard(log, [&]() -> int {
    Run run = prepare(options, /*continuous_wave_default=*/false);
    const int bound = report_bound(run, options, log);
    if (bound != exit_code::ok) {
      return bound;
    }

    const AxisSpec* angle = find_axis(run.scenario.sweep.axes, SweepAxis::Angle);
    const AxisSpec angle_axis = angle != nullptr ? *angle : default_angle_axis();
    const AveragePattern pattern =
        average_power(run.scenario.array, angle_axis.values);

    const std::filesystem::path csv_path = run.stem + ".csv";
    std::ofstream out = open_output(csv_path);
    write_average_csv(out, pattern, run.scenario.array.m_antennas,
                      run.scenario.output.components);
    finish_output(out, csv_path);
    log << "wrote " << csv_path.string() << '\n';

    log << "sin-domain edges: f_theta = ["
        << format_value(pattern.ftheta_edge_low) << ", "
        << format_value(pattern.ftheta_edge_high) << "]\n";
    const auto angle_edge = [&log](const char* name,
                                   const std::optional<double>& value) {
      log << name << " = ";
      if (value) {
        log << format_value(rad_to_deg(*value)) << " deg\n";
      } else {
        log << "outside real angles (edge sine beyond [-1, 1])\n";
      }
    };
    angle_edge("theta_1", pattern.theta1_rad);
    angle_edge("theta_2", pattern.theta2_rad);
    if (pattern.se_exact_rad) {
      log << "spatial extent (exact) = " << format_value(*pattern.se_exact_rad)
          << " rad\n";
    }
    log << "spatial extent (approx) = " << format_value(pattern.se_approx_rad)
        << " rad\n";
    try {
      const double width = measure_se_empirical(pattern, 3.0);
      log << "empirical 3 dB plateau width = " << format_value(width)
          << " rad\n";
    } catch (const std::exception& e) {
      log << "empirical 3 dB plateau width: n/a (" << e.what() << ")\n";
    }

    const auto it = std::max_element(pattern.power.begin(), pattern.power.end());
    log << "peak: power_lin = " << format_value(*it) << " at angle_deg = "
        << format_value(rad_to_deg(
               pattern.angles_rad[static_cast<std::size_t>(
                   it - pattern.power.begin())]))
        << '\n';

    if (run.scenario.output.plot_script) {
      const std::filesystem::path script = run.stem + ".gp";
      std::ofstream plot = open_output(script);
      write_plot_script(plot, csv_path.filename().string(), "angle_deg", 1, 3);
      finish_output(plot, script);
      log << "wrote " << script.string() << '\n';
    }
    return exit_code::ok;
  });
}

int run_compare(const CommandOptions& options, std::ostream& log) {
  return guard(log, [&]() -> int {
    Run run = prepare(options, /*continuous_wave_default=*/true);
    if (!run.scenario.design) {
      throw ValidationError("design: block required for the compare command");
    }
    const int bound = report_bound(run, options, log);
    if (bound != exit_code::ok) {
      return bound;
    }
    if (find_axis(run.scenario.sweep.axes, SweepAxis::Time) != nullptr) {
      throw ValidationError("axes: compare sweeps range and angle, not time");
    }

    const AxisSpec* range = find_axis(run.scenario.sweep.axes, SweepAxis::Range);
    const AxisSpec* angle = find_axis(run.scenario.sweep.axes, SweepAxis::Angle);
    const AxisSpec range_axis =
        range != nullptr ? *range
                         : AxisSpec::linspace(SweepAxis::Range, 0.0, 6.0e5, 201);
    const AxisSpec angle_axis = angle != nullptr ? *angle : default_angle_axis();
    const Model model = options.model_override.value_or(Model::Compact);
    const FixedPoint fixed{run.fixed_time, run.scenario.target.range_m,
                           run.scenario.target.angle_rad};

    const DesignSpec& spec = *run.scenario.design;
    const SynthesizedWeights synth = synthesize_weights(
        region_mask(spec.regions_deg, spec.grid_size),
        run.scenario.array.m_antennas);

    ArrayConfig phased = run.scenario.array;  // same taper, no offset
    phased.offset_hz = 0.0;
    ArrayConfig designed = run.scenario.array;
    designed.weights = synth.weights;

    struct Scheme {
      const char* label;
      const ArrayConfig* config;
    };
    const Scheme schemes[] = {{"par", &phased},
                              {"fda", &run.scenario.array},
                              {"dft", &designed}};
    for (const Scheme& scheme : schemes) {
      const BeamGrid grid = sweep(*scheme.config, {range_axis, angle_axis},
                                  fixed, model, run.continuous_wave);
      const std::filesystem::path csv_path =
          run.stem + "_" + scheme.label + ".csv";
      std::ofstream out = open_output(csv_path);
      write_grid_csv(out, grid);
      finish_output(out, csv_path);
      log << "wrote " << csv_path.string() << '\n';

      log << "  " << scheme.label << ": ";
      if (const auto tilt = measure_tilt(grid)) {
        log << "peak tilt d(sin theta)/dR = " << format_value(*tilt)
            << " per m";
      } else {
        log << "peak tilt n/a";
      }
      if (scheme.config->offset_hz != 0.0) {
        log << " (expected "
            << format_value(2.0 * scheme.config->offset_hz / speed_of_light)
            << " per m)";
      }
      log << '\n';
    }
    return exit_code::ok;
  });
}

}  // namespace fda
