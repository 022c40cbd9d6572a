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
#include <optional>
#include <string>
#include <vector>

#include "angvel/lin3.hpp"
#include "angvel/lyapunov.hpp"
#include "angvel/observer.hpp"
#include "angvel/plant.hpp"

namespace angvel {

/// Everything needed to run the plant and the observer side by side.
struct Scenario {
  PhysicalParams params;
  Gains gains;
  TorqueProfile torque_profile{ZeroTorque{}};
  Vec3 omega0;
  Mat3 R0{Mat3::identity()};
  Vec3 rhat1_0;
  Vec3 rhat2_0;
  std::optional<Vec3> xi0;  // empty: pick ξ0 so that ω̂(0) = 0
  double dt{1e-3};
  double t_final{10.0};
  int record_every{1};
  double omega_hat_bound{0.0};  // used only for gain checking

  /// Throws DomainError describing the first violated invariant.
  void validate() const;

  /// Non-fatal issues, e.g. dt too large for the filter gains.
  std::vector<std::string> warnings() const;

  /// Number of integration steps, t_final / dt.
  long long steps() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Free tumbling body with J = diag(3,2,1), ω0 = (2,−1,0.6), ω_M = 3,
/// R(0) = I, r̂1(0) = −e2, r̂2(0) = −e3, k1 = k2 = 14.5, l1 = l2 = 1,
/// dt = 1e-3 over 10 s.
Scenario reference_scenario();

/// Same body and initial data with state-dependent filter gains (margin 1),
/// dt = 1e-5 over 0.05 s.
Scenario reference_theorem_scenario();

/// Initial ξ: either the explicit value or −β at t = 0, which makes ω̂(0)
/// vanish exactly.
Vec3 init_xi(const Scenario& sc);

/// Plant and observer integrated as one 18-dimensional system.
struct CoupledState {
  PlantState plant;
  ObserverState observer;
};

CoupledState operator+(const CoupledState& a, const CoupledState& b);
CoupledState operator*(double s, const CoupledState& a);

/// Vector field of the coupled system. The observer reads the plant's
/// current r1, r2 (continuous measurements).
CoupledState coupled_rates(double t, const CoupledState& x, const Scenario& sc);

struct ProjectedRows {
  Vec3 r1;
  Vec3 r2;
  Vec3 r3;
  double drift{0.0};  // max(||r1|−1|, ||r2|−1|, |r1·r2|) before projection
};

/// Gram-Schmidt on (r1, r2), r3 = r1 × r2. Throws DomainError when
/// |r1 × r2| <= 1e-6.
ProjectedRows project_rows(const Vec3& r1, const Vec3& r2);

struct StepResult {
  PlantState plant;
  ObserverState observer;
  double drift{0.0};
};

/// One RK4 step of size sc.dt from time t, then re-orthonormalization of
/// the plant rows. Observer states are left untouched. Throws
/// IntegrationError on non-finite or degenerate states.
StepResult rk4_step(const PlantState& plant, const ObserverState& obs, double t, const Scenario& sc);

struct Sample {
  double t{0.0};
  PlantState plant;
  ObserverState observer;
  Vec3 omega_hat;
  ErrorState error;
  LyapunovSample lyapunov;
  double drift{0.0};          // max pre-projection drift since the previous sample
  bool a2_violation{false};   // |ω| > ω_M
  bool v_increase{false};     // theorem mode only: V rose since the previous sample

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Trajectory {
  std::vector<Sample> samples;
  std::size_t a2_violations{0};
  std::size_t v_increases{0};

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Integrates from 0 to t_final and records every record_every-th step.
/// Throws DomainError for an invalid scenario and IntegrationError on
/// blow-up.
Trajectory run(const Scenario& sc);

}  // namespace angvel
