#pragma once

// Command-line front end: builds states from flags, runs one experiment and
// writes a CSV or JSON table.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace squeezelab::cli {

inline constexpr const char* kToolVersion = "1.0.0";

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct RunMeta {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
};

enum class Format { csv, json };

/// 12 significant digits, '.' separator, no locale.
std::string format_double(double value);

std::string to_csv(const Table& table);
std::string to_json(const Table& table, const RunMeta& meta);

/// Writes the table to `path` ("-" or empty means `stdout_sink`). The
/// payload is rendered completely before the file is opened.
/// Throws ErrorKind::io_error.
void emit(const Table& table, const RunMeta& meta, Format format, const std::string& path,
          std::ostream& stdout_sink);

enum class Command { state, variance, higher_order, energy, optimize, table1, report };

struct RunConfig {
  Command command = Command::state;
  std::string family = "svs";
  double r = 1.0;
  double phase = 0.0;
  double alpha = 1.0;
  double alpha_im = 0.0;
  int m = 1;
  int l = 2;
  std::vector<double> r_list;
  std::vector<double> weights;
  std::size_t grid = 64;
  double k00 = 1.0;
  double phi = 0.0;
  std::optional<int> order;  // Hong-Mandel 2n; all of 4, 6, 8 when unset
  Format format = Format::csv;
  std::string output;
  std::optional<std::size_t> cutoff;
  std::optional<double> tail_tol;
  std::uint64_t seed = 0;
  int restarts = 32;
};

/// Computes the table for a validated configuration.
Table execute(const RunConfig& config);

/// Parameters echoed into JSON metadata.
RunMeta describe(const RunConfig& config);

/// Parses flags (and an optional --config key=value file), runs, writes.
/// Exit codes: 0 success, 2 invalid parameters, 3 numeric failure, 1 I/O.
/// Failures print one line "squeezelab: error=<Tag> message=<text>" to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace squeezelab::cli
