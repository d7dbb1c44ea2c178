#include "ringshift/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <system_error>
#include <type_traits>

#include "ringshift/errors.hpp"

namespace ringshift {

namespace {

std::string chars_of(double value, std::optional<std::chars_format> fmt) {
  char buf[64];
  const auto res = fmt ? std::to_chars(buf, buf + sizeof buf, value, *fmt)
                       : std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

bool needs_csv_quotes(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_field(const std::string& s) {
  if (!needs_csv_quotes(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string header_token(const Column& column) {
  return column.name + "[" + column.unit + "]";
}

// Split one CSV record, honoring quoted fields with doubled quotes.
std::vector<std::string> split_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"' && current.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

Cell parse_cell(const std::string& field) {
  if (!field.empty()) {
    std::int64_t i = 0;
    auto res = std::from_chars(field.data(), field.data() + field.size(), i);
    if (res.ec == std::errc{} && res.ptr == field.data() + field.size() &&
        std::to_string(i) == field)
      return i;
    double d = 0.0;
    res = std::from_chars(field.data(), field.data() + field.size(), d);
    if (res.ec == std::errc{} && res.ptr == field.data() + field.size()) return d;
  }
  return field;
}

}  // namespace

std::string format_double(double value) { return chars_of(value, std::nullopt); }

std::string format_double_scientific(double value) {
  return chars_of(value, std::chars_format::scientific);
}

std::string to_csv(const ScanTable& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_field(header_token(table.columns[c]));
  }
  out += '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table row width does not match its header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      std::visit(
          [&out](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, double>)
              out += format_double(cell);
            else if constexpr (std::is_same_v<T, std::int64_t>)
              out += std::to_string(cell);
            else
              out += csv_field(cell);
          },
          row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ScanTable& table) {
  std::string out = "{\"columns\":[";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += "{\"name\":\"" + json_escape(table.columns[c].name) + "\",\"unit\":\"" +
           json_escape(table.columns[c].unit) + "\"}";
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table row width does not match its header");
    if (r) out += ',';
    out += '[';
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      std::visit(
          [&out](const auto& cell) {
            using T = std::decay_t<decltype(cell)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isnan(cell) || std::isinf(cell))
                out += "null";
              else
                out += format_double_scientific(cell);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              out += std::to_string(cell);
            } else {
              out += '"' + json_escape(cell) + '"';
            }
          },
          row[c]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

ScanTable parse_csv(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  bool quoted = false;
  for (char c : text) {
    if (c == '"') quoted = !quoted;
    if (c == '\n' && !quoted) {
      lines.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) lines.push_back(std::move(current));
  if (lines.empty()) throw std::invalid_argument("table text has no header line");

  ScanTable table;
  for (const std::string& token : split_record(lines[0])) {
    Column column;
    const auto open = token.rfind('[');
    if (open != std::string::npos && !token.empty() && token.back() == ']') {
      column.name = token.substr(0, open);
      column.unit = token.substr(open + 1, token.size() - open - 2);
    } else {
      column.name = token;
    }
    table.columns.push_back(std::move(column));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<Cell> row;
    for (const std::string& field : split_record(lines[i])) row.push_back(parse_cell(field));
    if (row.size() != table.columns.size())
      throw std::invalid_argument("table row width does not match its header");
    table.rows.push_back(std::move(row));
  }
  return table;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw ConfigError("cannot write output file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ConfigError("cannot move output into place at " + path);
  }
}

}  // namespace ringshift
