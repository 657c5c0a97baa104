#include "fda/sweep.hpp"

#include <cmath>
#include <string>

#include "fda/constants.hpp"
#include "fda/errors.hpp"

namespace fda {

const char* axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Time:
      return "time";
    case SweepAxis::Range:
      return "range";
    case SweepAxis::Angle:
      return "angle";
  }
  return "?";
}

AxisSpec AxisSpec::linspace(SweepAxis axis, double start, double stop,
                            int count) {
  if (count < 1) {
    throw ValidationError("axis count: must be >= 1");
  }
  AxisSpec spec;
  spec.axis = axis;
  spec.values.resize(static_cast<std::size_t>(count));
  if (count == 1) {
    spec.values[0] = start;
    return spec;
  }
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) {
    spec.values[static_cast<std::size_t>(i)] = start + i * step;
  }
  spec.values.back() = stop;  // exact endpoint
  return spec;
}

namespace {

void validate_axis(const AxisSpec& spec) {
  const std::string name = axis_name(spec.axis);
  if (spec.values.empty()) {
    throw ValidationError(name + " axis: sample vector is empty");
  }
  if (spec.values.size() > 1) {
    const bool increasing = spec.values[1] > spec.values[0];
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
      const bool step_up = spec.values[i] > spec.values[i - 1];
      if (step_up != increasing || spec.values[i] == spec.values[i - 1]) {
        throw ValidationError(name + " axis: values must be strictly monotone");
      }
    }
  }
  for (const double v : spec.values) {
    if (!std::isfinite(v)) {
      throw ValidationError(name + " axis: values must be finite");
    }
    if (spec.axis == SweepAxis::Range && v < 0.0) {
      throw ValidationError("range axis: values must be >= 0");
    }
    if (spec.axis == SweepAxis::Angle && std::abs(v) > pi / 2.0) {
      throw ValidationError("angle axis: values must lie in [-pi/2, pi/2]");
    }
  }
}

struct Coord {
  double time_s;
  double range_m;
  double angle_rad;
};

void apply(Coord& c, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::Time:
      c.time_s = value;
      break;
    case SweepAxis::Range:
      c.range_m = value;
      break;
    case SweepAxis::Angle:
      c.angle_rad = value;
      break;
  }
}

}  // namespace

BeamGrid sweep(const ArrayConfig& config, std::vector<AxisSpec> axes,
               const FixedPoint& fixed, Model model, bool continuous_wave) {
  config.validate();
  if (axes.empty() || axes.size() > 2) {
    throw ValidationError("axes: expected one or two sweep axes");
  }
  if (axes.size() == 2 && axes[0].axis == axes[1].axis) {
    throw ValidationError("axes: duplicate sweep axis kind");
  }
  for (const AxisSpec& spec : axes) {
    validate_axis(spec);
  }

  BeamGrid grid;
  grid.axes = std::move(axes);
  grid.fixed = fixed;
  grid.model = model;
  grid.continuous_wave = continuous_wave;
  grid.config = config;

  const std::size_t n_rows = grid.axes[0].values.size();
  const std::size_t n_cols =
      grid.axes.size() == 2 ? grid.axes[1].values.size() : 1;
  grid.power.resize(n_rows * n_cols);

  for (std::size_t i = 0; i < n_rows; ++i) {
    for (std::size_t j = 0; j < n_cols; ++j) {
      Coord c{fixed.time_s, fixed.range_m, fixed.angle_rad};
      apply(c, grid.axes[0].axis, grid.axes[0].values[i]);
      if (grid.axes.size() == 2) {
        apply(c, grid.axes[1].axis, grid.axes[1].values[j]);
      }
      const Target cell{c.range_m, c.angle_rad};
      grid.power[i * n_cols + j] =
          beampattern(config, cell, c.time_s, model, continuous_wave);
    }
  }
  return grid;
}

}  // namespace fda
