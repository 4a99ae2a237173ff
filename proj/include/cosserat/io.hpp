// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace cosserat::io {

/// Deterministic number formatting shared by all writers ("%.12g").
std::string fmt(double v);

/// Minimal CSV table: fixed header, rows appended as preformatted cells.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);
  void add_row(std::vector<std::string> cells);
  std::size_t rows() const { return rows_.size(); }
  std::string to_string() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// SVG line chart: one polyline per named series over a common abscissa.
struct SvgSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};
std::string svg_line_chart(const std::vector<SvgSeries>& series, int width = 640,
                           int height = 480);
void write_text(const std::string& path, const std::string& content);

}  // namespace cosserat::io
