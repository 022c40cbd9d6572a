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

#include "angvel/sim.hpp"
#include "angvel/table.hpp"

namespace angvel {

struct SvgOptions {
  std::string x_column{"t"};
  bool log_y{false};
  int width{800};
  int height{480};
};

/// Standalone SVG line chart: one polyline per column against x_column,
/// min/max axis labels and a legend. Output depends only on the input.
/// Throws DomainError for an empty column list or an unknown column.
std::string render_svg(const Table& table, std::span<const std::string> columns,
                       const SvgOptions& opts = {});

inline std::string render_svg(const Trajectory& traj, std::span<const std::string> columns,
                              const SvgOptions& opts = {}) {
  return render_svg(trajectory_table(traj), columns, opts);
}

}  // namespace angvel
