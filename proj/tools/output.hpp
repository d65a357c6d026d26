#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cli {

using Cell = std::variant<double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// RFC 4180: comma separated, CRLF line ends, fields quoted when they hold
/// a comma, quote or line break. Numbers use 12 significant digits.
void write_csv(std::ostream& os, const Table& t);

/// {"metadata": ..., "columns": [...], "rows": [{column: value}, ...]}
void write_json(std::ostream& os, const Table& t, const nlohmann::ordered_json& metadata);

struct PlotOptions {
  std::string title;
  std::string x_column;
  std::vector<std::string> y_columns;
  bool log_x = false;
  bool log_y = false;  // plots |y| on a log axis, dropping zeros
};

/// Minimal SVG 1.1 line chart: frame, axis labels and one polyline per column.
void write_svg(std::ostream& os, const Table& t, const PlotOptions& opt);

std::string format_number(double v);

}  // namespace cli
