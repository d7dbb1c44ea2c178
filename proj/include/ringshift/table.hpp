#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ringshift {

/// Tabular result container behind every CLI output.
///
/// Columns carry a unit annotation rendered as "name[unit]" (dimensionless
/// quantities use "1"). Cells are doubles, integers, or strings. Doubles
/// serialize through std::to_chars (shortest round-trip form, locale-free,
/// '.' decimal separator), so re-parsing a table and serializing it again is
/// byte-identical and runs are deterministic.
using Cell = std::variant<double, std::int64_t, std::string>;

struct Column {
  std::string name;
  std::string unit;
};

struct ScanTable {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_double(double value);             // shortest round-trip
std::string format_double_scientific(double value);  // shortest scientific

std::string to_csv(const ScanTable& table);
/// One top-level object: {"columns":[{"name":..,"unit":..},..],"rows":[[..],..]}.
/// Doubles render in scientific notation; NaN renders as null.
std::string to_json(const ScanTable& table);

/// Inverse of to_csv (header "name[unit]" split back apart; cells typed as
/// int64 when they re-serialize identically, else double, else string).
ScanTable parse_csv(const std::string& text);

/// Write via temporary file + rename in the target directory, so readers
/// never observe a partial file.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace ringshift
