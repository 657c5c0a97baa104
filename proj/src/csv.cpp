#include "fda/csv.hpp"

#include <cmath>
#include <cstdio>

#include "fda/constants.hpp"

namespace fda {

namespace {

constexpr double db_floor = -400.0;

const char* axis_column(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::Time:
      return "time_s";
    case SweepAxis::Range:
      return "range_m";
    case SweepAxis::Angle:
      return "angle_deg";
  }
  return "?";
}

double axis_value(SweepAxis axis, double raw) {
  return axis == SweepAxis::Angle ? rad_to_deg(raw) : raw;
}

}  // namespace

std::string format_value(double value) {
  if (value == 0.0) {
    value = 0.0;  // render negative zero as "0"
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string format_exact(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double power_db(double power_lin, int m_antennas) {
  const double reference =
      static_cast<double>(m_antennas) * static_cast<double>(m_antennas);
  if (!(power_lin > 0.0)) {
    return db_floor;
  }
  const double db = 10.0 * std::log10(power_lin / reference);
  return db < db_floor ? db_floor : db;
}

void write_grid_csv(std::ostream& out, const BeamGrid& grid) {
  out << csv_banner << '\n';
  for (const AxisSpec& axis : grid.axes) {
    out << axis_column(axis.axis) << ',';
  }
  out << "power_lin,power_db\n";

  const std::size_t n_rows = grid.rows();
  const std::size_t n_cols = grid.cols();
  for (std::size_t i = 0; i < n_rows; ++i) {
    for (std::size_t j = 0; j < n_cols; ++j) {
      out << format_value(
          axis_value(grid.axes[0].axis, grid.axes[0].values[i]));
      out << ',';
      if (grid.axes.size() == 2) {
        out << format_value(
            axis_value(grid.axes[1].axis, grid.axes[1].values[j]));
        out << ',';
      }
      const double lin = grid.at(i, j);
      out << format_value(lin) << ','
          << format_value(power_db(lin, grid.config.m_antennas)) << '\n';
    }
  }
}

void write_average_csv(std::ostream& out, const AveragePattern& pattern,
                       int m_antennas, bool include_components) {
  out << csv_banner << '\n';
  out << "angle_deg,power_lin,power_db";
  const bool components =
      include_components && !pattern.p1.empty() && !pattern.p2.empty();
  if (components) {
    out << ",p1,p2";
  }
  out << '\n';
  for (std::size_t i = 0; i < pattern.angles_rad.size(); ++i) {
    out << format_value(rad_to_deg(pattern.angles_rad[i])) << ','
        << format_value(pattern.power[i]) << ','
        << format_value(power_db(pattern.power[i], m_antennas));
    if (components) {
      out << ',' << format_value(pattern.p1[i]) << ','
          << format_value(pattern.p2[i]);
    }
    out << '\n';
  }
}

void write_plot_script(std::ostream& out, const std::string& csv_name,
                       const std::string& x_label, int x_column,
                       int y_column) {
  out << "# fda-beam v1 plot script\n"
      << "set datafile separator \",\"\n"
      << "set xlabel \"" << x_label << "\"\n"
      << "set ylabel \"power_db\"\n"
      << "set grid\n"
      << "plot \"" << csv_name << "\" using " << x_column << ":" << y_column
      << " with lines notitle\n"
      << "pause -1\n";
}

}  // namespace fda
