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
#include "angvel/plant.hpp"

#include <numbers>
#include <string>

#include "angvel/error.hpp"

namespace angvel {

PhysicalParams PhysicalParams::make(const Mat3& J, double omega_M, std::optional<double> Jm,
                                    std::optional<double> JM) {
  if (!is_finite(J)) throw DomainError("inertia has non-finite entries");
  const double scale = max_abs(J);
  if (!is_symmetric(J, 1e-12 * scale)) throw DomainError("inertia is not symmetric");
  if (!(omega_M > 0.0) || !std::isfinite(omega_M)) throw DomainError("omega_max must be positive");

  const auto ev = eigenvalues_sym(J);
  if (!(ev[0] > 0.0)) throw DomainError("inertia is not positive definite");

  // Overrides may be looser than the spectrum but never tighter.
  const double slack = 1e-12 * ev[2];
  const double lo = Jm.value_or(ev[0]);
  const double hi = JM.value_or(ev[2]);
  if (!(lo > 0.0) || lo > ev[0] + slack) {
    throw DomainError("inertia lower bound " + std::to_string(lo) + " exceeds smallest eigenvalue " +
                      std::to_string(ev[0]));
  }
  if (hi < ev[2] - slack) {
    throw DomainError("inertia upper bound " + std::to_string(hi) + " is below largest eigenvalue " +
                      std::to_string(ev[2]));
  }
  return {J, inverse(J), lo, hi, omega_M};
}

Vec3 torque(const TorqueProfile& profile, double t) {
  struct Visitor {
    double t;
    Vec3 operator()(const ZeroTorque&) const { return {}; }
    Vec3 operator()(const ConstantTorque& c) const { return c.value; }
    Vec3 operator()(const SinusoidTorque& s) const {
      const double arg = 2.0 * std::numbers::pi * s.freq * t + s.phase;
      return std::sin(arg) * s.amp;
    }
  };
  return std::visit(Visitor{t}, profile);
}

PlantRates plant_rates(const PlantState& x, const Vec3& tau, const PhysicalParams& p) {
  const Vec3 h = p.J * x.omega;
  return {cross(x.r1, x.omega), cross(x.r2, x.omega), cross(x.r3, x.omega),
          p.J_inv * (cross(h, x.omega) + tau)};
}

Casimirs casimirs(const PlantState& x, const PhysicalParams& p) {
  const Vec3 h = p.J * x.omega;
  return {0.5 * dot(x.omega, h), norm(h)};
}

}  // namespace angvel
