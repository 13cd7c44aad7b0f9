#include "cli/table.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "entpower/types.hpp"

namespace entpower::cli {

std::string format_number(double value) {
  if (value == 0.0) {
    value = 0.0;  // drops the sign of -0
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void Table::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) {
    cells.push_back(format_number(v));
  }
  add_row(std::move(cells));
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header.size()) {
    throw std::logic_error("table row has " + std::to_string(cells.size()) + " cells, header has " +
                           std::to_string(header.size()));
  }
  rows.push_back(std::move(cells));
}

std::vector<double> Table::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw InvalidArgument("no column named '" + name + "'");
  }
  const auto k = static_cast<std::size_t>(it - header.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back(std::stod(row[k]));
  }
  return out;
}

void Table::write(std::ostream& out) const {
  const auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t k = 0; k < cells.size(); ++k) {
      out << (k ? "," : "") << cells[k];
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) {
    line(row);
  }
}

void Table::write(const std::filesystem::path& path) const {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  write(out);
}

}  // namespace entpower::cli
