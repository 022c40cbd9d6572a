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

#include <optional>
#include <variant>

#include "angvel/lin3.hpp"

namespace angvel {

/// Inertia and the bounds the observer design relies on:
/// Jm·I ⪯ J ⪯ JM·I and |ω| ≤ omega_M.
struct PhysicalParams {
  Mat3 J;
  Mat3 J_inv;
  double Jm{0.0};
  double JM{0.0};
  double omega_M{0.0};

  /// Validates J (finite, symmetric, positive definite) and derives J_inv.
  /// Jm/JM default to the extreme eigenvalues of J; explicit overrides must
  /// still bracket the spectrum. Throws DomainError.
  static PhysicalParams make(const Mat3& J, double omega_M, std::optional<double> Jm = std::nullopt,
                             std::optional<double> JM = std::nullopt);

  friend bool operator==(const PhysicalParams&, const PhysicalParams&) = default;
};

/// Attitude rows of R (inertial to body) and body angular velocity.
/// r3 is carried alongside r1, r2 rather than rebuilt from them.
struct PlantState {
  Vec3 r1;
  Vec3 r2;
  Vec3 r3;
  Vec3 omega;

  static PlantState from_rotation(const Mat3& R, const Vec3& omega) {
    return {R.row(0), R.row(1), R.row(2), omega};
  }
  Mat3 rotation() const { return Mat3::from_rows(r1, r2, r3); }

  friend bool operator==(const PlantState&, const PlantState&) = default;
};

struct ZeroTorque {
  friend bool operator==(const ZeroTorque&, const ZeroTorque&) = default;
};
struct ConstantTorque {
  Vec3 value;
  friend bool operator==(const ConstantTorque&, const ConstantTorque&) = default;
};
/// amp_i · sin(2π·freq·t + phase), freq in Hz.
struct SinusoidTorque {
  Vec3 amp;
  double freq{0.0};
  double phase{0.0};
  friend bool operator==(const SinusoidTorque&, const SinusoidTorque&) = default;
};
using TorqueProfile = std::variant<ZeroTorque, ConstantTorque, SinusoidTorque>;

Vec3 torque(const TorqueProfile& profile, double t);

struct PlantRates {
  Vec3 dr1;
  Vec3 dr2;
  Vec3 dr3;
  Vec3 domega;
};

/// ṙ_i = r_i × ω,  J ω̇ = (Jω) × ω + τ.
PlantRates plant_rates(const PlantState& x, const Vec3& tau, const PhysicalParams& p);

/// First integrals of torque-free motion.
struct Casimirs {
  double energy{0.0};         // ½ ωᵀJω
  double momentum_norm{0.0};  // |Jω|
};

Casimirs casimirs(const PlantState& x, const PhysicalParams& p);

}  // namespace angvel
