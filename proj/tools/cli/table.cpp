#include "table.hpp"

#include <cmath>
#include <json.hpp>
#include <stdexcept>

namespace sphfun::cli {

namespace {

using nlohmann::ordered_json;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double x) const {
      if (std::isnan(x)) return "nan";
      if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
      return ordered_json(x).dump();
    }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(V{}, c);
}

ordered_json json_cell(const Cell& c) {
  struct V {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(double x) const {
      if (!std::isfinite(x)) return nullptr;
      return x;
    }
    ordered_json operator()(long long x) const { return x; }
    ordered_json operator()(bool b) const { return b; }
    ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(V{}, c);
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table row width does not match the header");
  }
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + name + "' (csv or json)");
}

void write_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::csv) {
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
      os << (k ? "," : "") << csv_escape(t.columns[k]);
    }
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << (k ? "," : "") << csv_cell(row[k]);
      }
      os << '\n';
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t k = 0; k < row.size(); ++k) {
      obj[t.columns[k]] = json_cell(row[k]);
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

}  // namespace sphfun::cli
