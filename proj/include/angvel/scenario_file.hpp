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

#include <string>
#include <string_view>

#include "angvel/sim.hpp"

namespace angvel {

/// Parses the flat `key = values` scenario format ('#' starts a comment).
///
/// Required: inertia_diag | inertia_full, omega0, omega_max, rhat1_0,
/// rhat2_0, k1, k2, l_mode, l1 + l2 (constant) | l_margin (theorem), torque,
/// dt, t_final.
/// Optional: R0 (identity), xi0 (auto), record_every (1),
/// omega_hat_bound (2·omega_max), inertia_min / inertia_max (eigenvalue
/// bounds of J).
///
/// Throws ParseError naming the offending key for missing, duplicate,
/// unknown or malformed entries, and for values that fail scenario
/// validation.
Scenario parse_scenario(std::string_view text);

/// Effective configuration in the same format; parse_scenario(dump_scenario(s)) == s.
std::string dump_scenario(const Scenario& sc);

}  // namespace angvel
