#pragma once

#include <cstddef>
#include <vector>

#include "fda/array_factor.hpp"
#include "fda/config.hpp"

namespace fda {

enum class SweepAxis {
  Time,   // observation time, s
  Range,  // target range, m (>= 0)
  Angle,  // target angle, rad in [-pi/2, pi/2]
};

const char* axis_name(SweepAxis axis);

// One swept coordinate: strictly monotone sample values.
struct AxisSpec {
  SweepAxis axis = SweepAxis::Angle;
  std::vector<double> values;

  static AxisSpec linspace(SweepAxis axis, double start, double stop,
                           int count);
};

// Coordinates held fixed for axes that are not swept.
struct FixedPoint {
  double time_s = 0.0;
  double range_m = 0.0;
  double angle_rad = 0.0;
};

// Dense pattern evaluation over one or two axes.  power is row-major:
// axes[0] is the outer (row) axis, axes[1] the inner (column) axis.
struct BeamGrid {
  std::vector<AxisSpec> axes;
  FixedPoint fixed;
  Model model = Model::Exact;
  bool continuous_wave = false;
  std::vector<double> power;
  ArrayConfig config;  // snapshot of the evaluated configuration

  std::size_t rows() const { return axes.empty() ? 0 : axes[0].values.size(); }
  std::size_t cols() const {
    return axes.size() < 2 ? 1 : axes[1].values.size();
  }
  double at(std::size_t row, std::size_t col) const {
    return power[row * cols() + col];
  }
};

// Evaluates the beampattern over the given axes.  Cells are independent; each
// cell's element sum runs in ascending index order, so results do not depend
// on evaluation order.  Throws ValidationError for zero or more than two
// axes, duplicate axis kinds, empty or non-monotone sample vectors, negative
// ranges, or angles outside [-pi/2, pi/2].
BeamGrid sweep(const ArrayConfig& config, std::vector<AxisSpec> axes,
               const FixedPoint& fixed, Model model,
               bool continuous_wave = false);

}  // namespace fda
