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

#include "angvel/lin3.hpp"
#include "angvel/observer.hpp"
#include "angvel/plant.hpp"

namespace angvel {

/// z = ω̂ − ω, e_i = r̂_i − r_i.
struct ErrorState {
  Vec3 z;
  Vec3 e1;
  Vec3 e2;
  friend bool operator==(const ErrorState&, const ErrorState&) = default;
};

/// Vz = |Jz|, Ve = ½(|e1|² + |e2|²), V = Vz + Ve.
struct LyapunovSample {
  double Vz{0.0};
  double Ve{0.0};
  double V{0.0};
  friend bool operator==(const LyapunovSample&, const LyapunovSample&) = default;
};

ErrorState errors(const Vec3& omega_hat, const Vec3& omega, const Vec3& rhat1, const Vec3& r1,
                  const Vec3& rhat2, const Vec3& r2);

LyapunovSample v_total(const ErrorState& err, const PhysicalParams& p);

/// Closed-form ż, written in four groups:
///   J⁻¹(k1 r1×² + k2 r2×²) z
/// + J⁻¹((Jz)×z + (Jω)×z + (Jz)×ω)
/// + J⁻¹ k1 (e1× r1×) z
/// + J⁻¹ k2 (e2× r2×) z
/// The last two together with the first are J⁻¹(k1 r̂1× r1× + k2 r̂2× r2×) z.
/// Independent of the observer implementation; used as a cross-check of
/// the simulated closed loop.
Vec3 z_rate_explicit(const ErrorState& err, const Vec3& r1, const Vec3& r2, const Vec3& omega,
                     const Gains& g, const PhysicalParams& p);

struct FilterErrorRates {
  Vec3 de1;
  Vec3 de2;
};

/// ė_i = r_i × z + e_i × ω̂ − l_i e_i.
FilterErrorRates e_rate_explicit(const ErrorState& err, const Vec3& r1, const Vec3& r2,
                                 const Vec3& omega_hat, double l1, double l2);

/// Sampled decrement monitor. |Jz| is not differentiable at z = 0, so the
/// check is skipped once the earlier sample has Vz <= kVzGuard.
inline constexpr double kDecrementTol = 1e-9;
inline constexpr double kVzGuard = 1e-6;

inline bool decrement_violated(const LyapunovSample& prev, const LyapunovSample& next) {
  return prev.Vz > kVzGuard && next.V > prev.V + kDecrementTol;
}

}  // namespace angvel
