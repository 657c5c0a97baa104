#pragma once

#include <ostream>
#include <string>

#include "fda/analysis.hpp"
#include "fda/sweep.hpp"

namespace fda {

// All emitters write the header line "# fda-beam v1", then a column-name row,
// then one data row per cell.  Angles are emitted in degrees, power both
// linearly and in dB referenced to M^2 (floored at -400 dB).  Formatting is
// locale-independent and fixed, so identical inputs produce identical bytes.

inline constexpr const char* csv_banner = "# fda-beam v1";

// Fixed "%.12g" rendering used for CSV data values.
std::string format_value(double value);

// Exact round-trip rendering ("%.17g") used for weights files.
std::string format_exact(double value);

double power_db(double power_lin, int m_antennas);

void write_grid_csv(std::ostream& out, const BeamGrid& grid);

void write_average_csv(std::ostream& out, const AveragePattern& pattern,
                       int m_antennas, bool include_components);

// Gnuplot script plotting y_column against x_column of the named CSV
// (1-based column indices).
void write_plot_script(std::ostream& out, const std::string& csv_name,
                       const std::string& x_label, int x_column,
                       int y_column);

}  // namespace fda
