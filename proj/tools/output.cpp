#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::get<std::string>(c);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  return std::get<std::string>(c);
}

std::size_t column_index(const Table& t, const std::string& name) {
  auto it = std::find(t.columns.begin(), t.columns.end(), name);
  if (it == t.columns.end()) throw std::invalid_argument("unknown column " + name);
  return static_cast<std::size_t>(it - t.columns.begin());
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const Table& t, const nlohmann::ordered_json& metadata) {
  nlohmann::ordered_json doc;
  doc["metadata"] = metadata;
  doc["columns"] = t.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << "\n";
}

void write_svg(std::ostream& os, const Table& t, const PlotOptions& opt) {
  const double width = 800, height = 500, left = 80, right = 20, top = 40, bottom = 60;
  const std::size_t xi = column_index(t, opt.x_column);
  std::vector<std::size_t> yi;
  for (const auto& c : opt.y_columns) yi.push_back(column_index(t, c));

  auto tx = [&](double v) { return opt.log_x ? std::log10(v) : v; };
  auto ty = [&](double v) { return opt.log_y ? std::log10(std::abs(v)) : v; };
  auto usable_x = [&](double v) { return std::isfinite(v) && (!opt.log_x || v > 0.0); };
  auto usable_y = [&](double v) { return std::isfinite(v) && (!opt.log_y || v != 0.0); };

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& row : t.rows) {
    const double x = std::get<double>(row[xi]);
    if (!usable_x(x)) continue;
    for (std::size_t c : yi) {
      const double y = std::get<double>(row[c]);
      if (!usable_y(y)) continue;
      x0 = std::min(x0, tx(x));
      x1 = std::max(x1, tx(x));
      y0 = std::min(y0, ty(y));
      y1 = std::max(y1, ty(y));
    }
  }
  if (!(x1 > x0)) { x0 -= 0.5; x1 += 0.5; }
  if (!(y1 > y0)) { y0 -= 0.5; y1 += 0.5; }
  const double pw = width - left - right;
  const double ph = height - top - bottom;
  auto px = [&](double x) { return left + (tx(x) - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (y1 - ty(y)) / (y1 - y0) * ph; };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
     << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n"
     << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\">" << escape_xml(opt.title) << "</text>\n";
  if (!opt.log_y && y0 < 0.0 && y1 > 0.0) {
    os << "<line x1=\"" << left << "\" y1=\"" << format_number(py(0.0)) << "\" x2=\"" << left + pw << "\" y2=\""
       << format_number(py(0.0)) << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  }
  auto axis_label = [](double v, bool log) { return log ? "1e" + format_number(v) : format_number(v); };
  os << "<text x=\"" << left << "\" y=\"" << height - bottom + 18 << "\" text-anchor=\"middle\">"
     << axis_label(x0, opt.log_x) << "</text>\n"
     << "<text x=\"" << left + pw << "\" y=\"" << height - bottom + 18 << "\" text-anchor=\"middle\">"
     << axis_label(x1, opt.log_x) << "</text>\n"
     << "<text x=\"" << left - 6 << "\" y=\"" << top + ph << "\" text-anchor=\"end\">" << axis_label(y0, opt.log_y)
     << "</text>\n"
     << "<text x=\"" << left - 6 << "\" y=\"" << top + 10 << "\" text-anchor=\"end\">" << axis_label(y1, opt.log_y)
     << "</text>\n"
     << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 18 << "\" text-anchor=\"middle\">"
     << escape_xml(opt.x_column) << "</text>\n";

  for (std::size_t k = 0; k < yi.size(); ++k) {
    const char* colour = palette[k % 5];
    os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : t.rows) {
      const double x = std::get<double>(row[xi]);
      const double y = std::get<double>(row[yi[k]]);
      if (!usable_x(x) || !usable_y(y)) continue;
      os << (first ? "" : " ") << format_number(px(x)) << "," << format_number(py(y));
      first = false;
    }
    os << "\"/>\n";
    os << "<text x=\"" << left + pw - 10 << "\" y=\"" << top + 16 + 14 * k << "\" text-anchor=\"end\" fill=\""
       << colour << "\">" << escape_xml(opt.y_columns[k]) << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace cli
