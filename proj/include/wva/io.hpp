#pragma once

#include <string>
#include <vector>

namespace wva {

/// Numeric table with '#' metadata lines, a header row and data rows.
/// Every value is required to be finite at emission time.
struct SweepTable {
  std::vector<std::string> comments;  // emitted as leading '# ' lines
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Render a double with 17 significant digits (round-trip exact).
std::string format_value(double value);

/// Shorter rendering for labels and metadata (12 significant digits).
std::string format_label(double value);

std::string to_csv(const SweepTable& table);

/// Write CSV to `path`, creating parent directories. Throws IoError on
/// filesystem failure and InvalidParameterError on non-finite values.
void write_csv(const std::string& path, const SweepTable& table);

/// Write arbitrary text (used for JSON reports).
void write_text(const std::string& path, const std::string& content);

}  // namespace wva
