#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace entpower::cli {

/// Numeric text with 9 significant digits; negative zero prints as 0.
std::string format_number(double value);

/// A CSV table held as preformatted cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  explicit Table(std::vector<std::string> columns) : header(std::move(columns)) {}

  void add_row(const std::vector<double>& values);
  void add_row(std::vector<std::string> cells);

  /// Column `name` of every row, parsed back to double.
  std::vector<double> column(const std::string& name) const;

  void write(std::ostream& out) const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace entpower::cli
