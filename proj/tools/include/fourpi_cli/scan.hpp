#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fourpi_cli/config.hpp"

namespace fourpi::cli {

// Tabular scan output: a fixed header and one row per grid point, in grid
// order.
struct ScanTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  // Columns drawn in the SVG chart, against column 0.
  std::vector<std::string> plotted;
  // Free-form summary lines ("max_abs_err = ...").
  std::vector<std::string> summary;
  // Non-fatal diagnostics from the physics routes, deduplicated.
  std::vector<std::string> warnings;
};

// Evenly spaced grid from start to stop inclusive.
std::vector<double> linear_grid(const ScanRange& range);

// Runs the configured sweep. Library errors (closed channels, invalid
// physics preconditions, quadrature failures) propagate as fourpi::Error.
ScanTable run_scan(const ScanConfig& config);

// Comma-separated, LF line endings, header row, values as %.11e
// (12 significant digits).
void write_csv(std::ostream& out, const ScanTable& table);
std::string format_value(double value);

// Reads back a table written by write_csv. Throws std::runtime_error on a
// malformed file.
ScanTable read_csv(std::istream& in);

// Static line chart: one polyline per plotted column, linear axes, legend.
void write_svg(std::ostream& out, const ScanTable& table,
               const std::string& title);

}  // namespace fourpi::cli
