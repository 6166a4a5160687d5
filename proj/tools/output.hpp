// Copyright 2026 The qes Authors
// SPDX-License-Identifier: Apache-2.0

// Serialization helpers shared by the CLI subcommands. Every float leaves the
// program through fmt15/num so that output is reproducible byte for byte.

#ifndef QES_TOOLS_OUTPUT_HPP_
#define QES_TOOLS_OUTPUT_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace qes::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

/// Rounds to 15 significant digits; -0 becomes 0.
inline double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

inline std::string fmt15(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", round15(v));
  return buf;
}

/// JSON number (null when not finite).
inline json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

inline json num_array(std::span<const double> v) {
  json a = json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

/// Flat table behind the csv and table formats. Cells are preformatted.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) {
    row.resize(columns.size());
    rows.push_back(std::move(row));
  }
};

inline std::string cell(double v) { return fmt15(v); }
inline std::string cell(int v) { return std::to_string(v); }
inline std::string cell(bool v) { return v ? "true" : "false"; }
inline std::string cell(const std::string& v) { return v; }
inline std::string cell(const char* v) { return v; }

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_escape(t.columns[i]);
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(r[i]);
    os << '\n';
  }
}

inline void write_aligned(std::ostream& os, const Table& t) {
  std::vector<std::size_t> w(t.columns.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.columns[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) s += "  ";
      s += std::string(w[i] - r[i].size(), ' ') + r[i];
    }
    os << s << '\n';
  };
  line(t.columns);
  std::vector<std::string> rule(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) rule[i] = std::string(w[i], '-');
  line(rule);
  for (const auto& r : t.rows) line(r);
}

/// What a subcommand hands back to main.
struct Report {
  json doc = json::object();
  Table table;
  int exit_code = 0;
};

inline json header(const std::string& command) {
  json j = json::object();
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

}  // namespace qes::cli

#endif  // QES_TOOLS_OUTPUT_HPP_
