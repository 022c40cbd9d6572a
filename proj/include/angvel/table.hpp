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
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "angvel/sim.hpp"

namespace angvel {

/// Column-major view of a trajectory or of a CSV file read back from disk.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// -1 when absent.
  int column_index(std::string_view name) const;
  /// Throws DomainError for an unknown column.
  std::vector<double> column(std::string_view name) const;
};

/// Trajectory CSV columns, in file order. The order is part of the file
/// format.
std::span<const std::string> trajectory_columns();

Table trajectory_table(const Trajectory& traj);

/// Shortest decimal string that parses back to exactly `v`, never
/// locale-dependent.
std::string format_number(double v);

/// Parses a finite or infinite decimal number; the whole token must be
/// consumed. Throws ParseError.
double parse_number(std::string_view token);

/// Header line plus one row per sample, LF line endings.
std::string write_csv(const Table& table);
inline std::string write_csv(const Trajectory& traj) { return write_csv(trajectory_table(traj)); }

/// Inverse of write_csv. Throws ParseError on ragged rows or bad numbers.
Table read_csv(std::string_view text);

}  // namespace angvel
