#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fourpi_cli/scan.hpp"

namespace fourpi::cli {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string svg_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b"};

}  // namespace

std::string format_value(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

void write_csv(std::ostream& out, const ScanTable& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_value(row[i]);
    }
    out << '\n';
  }
}

ScanTable read_csv(std::istream& in) {
  ScanTable table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
  table.columns = split(line, ',');
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != table.columns.size()) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) +
                               ": wrong number of fields");
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty()) {
        throw std::runtime_error("CSV line " + std::to_string(line_no) +
                                 ": malformed value '" + cell + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_svg(std::ostream& out, const ScanTable& table,
               const std::string& title) {
  constexpr double kWidth = 720.0;
  constexpr double kHeight = 440.0;
  constexpr double kLeft = 70.0;
  constexpr double kRight = 160.0;
  constexpr double kTop = 40.0;
  constexpr double kBottom = 50.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  std::vector<std::size_t> series;
  for (const auto& name : table.plotted) {
    const auto it = std::find(table.columns.begin(), table.columns.end(), name);
    if (it != table.columns.end()) {
      series.push_back(static_cast<std::size_t>(it - table.columns.begin()));
    }
  }

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& row : table.rows) {
    x_min = std::min(x_min, row[0]);
    x_max = std::max(x_max, row[0]);
    for (const std::size_t c : series) {
      y_min = std::min(y_min, row[c]);
      y_max = std::max(y_max, row[c]);
    }
  }
  if (!(x_max > x_min)) x_max = x_min + 1.0;
  if (!std::isfinite(y_min)) {
    y_min = 0.0;
    y_max = 1.0;
  }
  y_min = std::min(y_min, 0.0);
  if (!(y_max > y_min)) y_max = y_min + 1.0;

  auto sx = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto sy = [&](double y) {
    return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"14\">" << title
      << "</text>\n";
  // Frame, five ticks per axis.
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x_min + (x_max - x_min) * i / 4.0;
    const double fy = y_min + (y_max - y_min) * i / 4.0;
    out << "<text x=\"" << svg_number(sx(fx)) << "\" y=\""
        << svg_number(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
        << tick_label(fx)
        << "</text>\n";
    out << "<text x=\"" << svg_number(kLeft - 6) << "\" y=\""
        << svg_number(sy(fy) + 4) << "\" text-anchor=\"end\">"
        << tick_label(fy)
        << "</text>\n";
  }
  out << "<text x=\"" << svg_number(kLeft + plot_w / 2) << "\" y=\""
      << svg_number(kHeight - 10) << "\" text-anchor=\"middle\">"
      << table.columns.front() << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = kPalette[s % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << (r ? " " : "") << svg_number(sx(table.rows[r][0])) << ','
          << svg_number(sy(table.rows[r][series[s]]));
    }
    out << "\"/>\n";
    const double ly = kTop + 16.0 + 18.0 * static_cast<double>(s);
    const double lx = kLeft + plot_w + 14.0;
    out << "<line x1=\"" << svg_number(lx) << "\" y1=\"" << svg_number(ly - 4)
        << "\" x2=\"" << svg_number(lx + 24) << "\" y2=\"" << svg_number(ly - 4)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << svg_number(lx + 30) << "\" y=\"" << svg_number(ly)
        << "\">" << table.columns[series[s]] << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace fourpi::cli
