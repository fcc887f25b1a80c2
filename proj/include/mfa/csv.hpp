#pragma once

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "mfa/errors.hpp"

namespace mfa {

// 12 significant digits, '.' decimal; inf/nan render as strtod-parseable text.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    throw InvalidInputError("csv: no column named " + name);
  }
  double number_at(std::size_t row, int col) const {
    const std::string& cell = rows[row][static_cast<std::size_t>(col)];
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str()) throw InvalidInputError("csv: cell is not a number: " + cell);
    return v;
  }
};

inline CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      if (cells.size() != t.header.size())
        throw InvalidInputError("csv: ragged row");
      t.rows.push_back(std::move(cells));
    }
  }
  if (first) throw InvalidInputError("csv: empty input");
  return t;
}

}  // namespace mfa
