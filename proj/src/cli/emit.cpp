#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "squeezelab/cli.hpp"
#include "squeezelab/error.hpp"

namespace squeezelab::cli {

namespace {

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      cell);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

nlohmann::ordered_json cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          // Same 12-digit value as the CSV rendering.
          return std::stod(format_double(v));
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  std::string text = buf;
  if (text == "-0") text = "0";
  return text;
}

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table, const RunMeta& meta) {
  nlohmann::ordered_json doc;
  doc["meta"]["command"] = meta.command;
  doc["meta"]["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta.parameters) doc["meta"]["parameters"][key] = value;
  doc["meta"]["tool_version"] = meta.tool_version;
  doc["meta"]["seed"] = meta.seed;
  doc["data"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      record[table.columns[i]] = cell_json(row[i]);
    }
    doc["data"].push_back(std::move(record));
  }
  return doc.dump(2) + "\n";
}

void emit(const Table& table, const RunMeta& meta, Format format, const std::string& path,
          std::ostream& stdout_sink) {
  const std::string payload = format == Format::csv ? to_csv(table) : to_json(table, meta);
  if (path.empty() || path == "-") {
    stdout_sink << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::io_error, "cannot open " + path + " for writing");
  file << payload;
  file.flush();
  if (!file) throw Error(ErrorKind::io_error, "write to " + path + " failed");
}

}  // namespace squeezelab::cli
