#include "wva/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wva/errors.hpp"

namespace wva {

std::string format_value(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_label(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream out;
  for (const auto& line : table.comments) out << "# " << line << "\n";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ",";
    out << table.columns[c];
  }
  out << "\n";
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size()) {
      throw InvalidParameterError("to_csv: row width does not match header");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!std::isfinite(row[c])) {
        throw InvalidParameterError("to_csv: non-finite value in table");
      }
      if (c) out << ",";
      out << format_value(row[c]);
    }
    out << "\n";
  }
  return out.str();
}

void write_text(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path(), ec);
  }
  std::ofstream file(p, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("cannot open output file: " + path);
  }
  file << content;
  if (!file) {
    throw IoError("write failed: " + path);
  }
}

void write_csv(const std::string& path, const SweepTable& table) {
  write_text(path, to_csv(table));
}

}  // namespace wva
