#include "lzlab/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

namespace lzlab::output {

namespace fs = std::filesystem;

void Table::add_column(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != rows())
    throw std::logic_error("column '" + name + "' has mismatched length");
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (c) out += ',';
    out += t.header[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
      if (c) out += ',';
      out += format_double(t.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  // hand-rolled so numbers keep the same 17-digit text as the CSV
  std::string out = "{\n  \"columns\": [";
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    if (c) out += ", ";
    out += nlohmann::json(t.header[c]).dump();
  }
  out += "],\n  \"data\": {\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    out += "    " + nlohmann::json(t.header[c]).dump() + ": [";
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (r) out += ",";
      const double v = t.columns[c][r];
      out += std::isfinite(v) ? format_double(v) : "null";
    }
    out += c + 1 < t.columns.size() ? "],\n" : "]\n";
  }
  out += "  }\n}\n";
  return out;
}

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

fs::path write_table(const fs::path& dir, const std::string& stem, const Table& t, Format fmt) {
  fs::path p = dir / (stem + (fmt == Format::csv ? ".csv" : ".json"));
  write_atomic(p, fmt == Format::csv ? to_csv(t) : to_json(t));
  return p;
}

std::string manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["params"] = nlohmann::ordered_json::parse(params_to_json(m.params));
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& o : m.outputs) j["outputs"].push_back({{"path", o.path}, {"kind", o.kind}});
  j["version"] = m.version;
  j["wall_time"] = m.wall_time;
  return j.dump(2) + "\n";
}

fs::path write_manifest(const fs::path& dir, const std::string& stem, const RunManifest& m) {
  for (const auto& o : m.outputs)
    if (!fs::exists(o.path)) throw std::runtime_error("manifest lists missing output " + o.path);
  fs::path p = dir / (stem + ".manifest.json");
  write_atomic(p, manifest_json(m));
  return p;
}

}  // namespace lzlab::output
