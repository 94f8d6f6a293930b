#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "lzlab/params.hpp"

namespace lzlab::output {

inline constexpr const char* kVersion = "lzlab 1.0.0";

enum class Format { csv, json };

/// Column-major table: every column has the same length.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
  void add_column(std::string name, std::vector<double> values);
};

/// 17 significant digits, shortest-form independent; identical input gives
/// identical text.
std::string format_double(double v);

std::string to_csv(const Table& t);
/// {"columns": [...], "data": {"col": [...], ...}}
std::string to_json(const Table& t);

/// Writes `content` to `path` through a temporary file in the same
/// directory followed by a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Writes `t` as `<dir>/<stem>.csv` or `.json`; returns the path.
std::filesystem::path write_table(const std::filesystem::path& dir, const std::string& stem,
                                  const Table& t, Format fmt);

struct OutputFile {
  std::string path;
  std::string kind;
};

struct RunManifest {
  std::string command;
  Params params;
  std::vector<OutputFile> outputs;
  std::string version = kVersion;
  double wall_time = 0.0;  // seconds
};

std::string manifest_json(const RunManifest& m);

/// Writes `<dir>/<stem>.manifest.json` after checking every listed output
/// exists.
std::filesystem::path write_manifest(const std::filesystem::path& dir, const std::string& stem,
                                     const RunManifest& m);

}  // namespace lzlab::output
