/*
 * Copyright (C) 2026 The angvel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "angvel/table.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "angvel/error.hpp"

namespace angvel {

int Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<double> Table::column(std::string_view name) const {
  const int idx = column_index(name);
  if (idx < 0) throw DomainError("unknown column '" + std::string(name) + "'");
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[static_cast<std::size_t>(idx)]);
  return out;
}

std::span<const std::string> trajectory_columns() {
  static const std::array<std::string, 26> cols{
      "t",    "wx",   "wy",   "wz",   "whx",  "why",  "whz",   "r1x",    "r1y",
      "r1z",  "r2x",  "r2y",  "r2z",  "rh1x", "rh1y", "rh1z",  "rh2x",   "rh2y",
      "rh2z", "znorm", "e1norm", "e2norm", "Vz", "Ve", "V", "drift"};
  return cols;
}

Table trajectory_table(const Trajectory& traj) {
  Table table;
  const auto cols = trajectory_columns();
  table.columns.assign(cols.begin(), cols.end());
  table.rows.reserve(traj.samples.size());
  for (const Sample& s : traj.samples) {
    const PlantState& x = s.plant;
    const ObserverState& o = s.observer;
    table.rows.push_back({s.t,
                          x.omega.x, x.omega.y, x.omega.z,
                          s.omega_hat.x, s.omega_hat.y, s.omega_hat.z,
                          x.r1.x, x.r1.y, x.r1.z,
                          x.r2.x, x.r2.y, x.r2.z,
                          o.rhat1.x, o.rhat1.y, o.rhat1.z,
                          o.rhat2.x, o.rhat2.y, o.rhat2.z,
                          norm(s.error.z), norm(s.error.e1), norm(s.error.e2),
                          s.lyapunov.Vz, s.lyapunov.Ve, s.lyapunov.V,
                          s.drift});
  }
  return table;
}

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

double parse_number(std::string_view token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last || first == last) {
    throw ParseError("not a number: '" + std::string(token) + "'");
  }
  return v;
}

std::string write_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_number(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Table read_csv(std::string_view text) {
  Table table;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split(line, ',');
    if (table.columns.empty()) {
      for (auto f : fields) table.columns.emplace_back(f);
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw ParseError("csv line " + std::to_string(line_no) + ": expected " +
                       std::to_string(table.columns.size()) + " fields, got " + std::to_string(fields.size()));
    }
    std::vector<double> row;
    row.reserve(fields.size());
    for (auto f : fields) {
      try {
        row.push_back(parse_number(f));
      } catch (const ParseError& e) {
        throw ParseError("csv line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (table.columns.empty()) throw ParseError("csv: missing header line");
  return table;
}

}  // namespace angvel
