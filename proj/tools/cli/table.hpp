#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace sphfun::cli {

// Empty cells (monostate) print as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

Format parse_format(const std::string& name);

// Doubles use the shortest round-trip representation, so output is
// byte-identical across runs. Non-finite doubles are "nan"/"inf" in CSV and
// null in JSON.
void write_table(std::ostream& os, const Table& t, Format f);

}  // namespace sphfun::cli
