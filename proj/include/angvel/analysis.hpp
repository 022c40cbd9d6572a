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

#include <cstddef>
#include <span>

#include "angvel/plant.hpp"
#include "angvel/sim.hpp"

namespace angvel {

struct TimedValue {
  double t{0.0};
  double v{0.0};
};

/// Log-linear fit ln v ≈ log_c − lambda·t.
struct RateFit {
  double lambda{0.0};
  double log_c{0.0};
  double r_squared{0.0};
  std::size_t n_points{0};
  bool flat{false};  // ln v has zero variance; r_squared is reported as 1
};

/// Values at or below this are treated as numerical zeros and skipped.
inline constexpr double kFitFloor = 1e-12;

/// Ordinary least squares of ln v against t over samples with t in [t0, t1]
/// and v > kFitFloor. Throws DomainError with fewer than two usable samples.
RateFit fit_rate(std::span<const TimedValue> samples, double t0, double t1);

struct ConservationReport {
  double max_rel_energy_drift{0.0};
  double max_rel_momentum_drift{0.0};
};

ConservationReport conservation_report(const Trajectory& traj, const PhysicalParams& p);

/// Largest pre-projection drift of the attitude rows over every step.
double orthonormality_drift(const Trajectory& traj);

}  // namespace angvel
