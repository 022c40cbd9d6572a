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

#include <variant>

#include "angvel/lin3.hpp"
#include "angvel/plant.hpp"

namespace angvel {

/// Fixed filter gains l1, l2.
struct ConstantL {
  double l1{1.0};
  double l2{1.0};
  friend bool operator==(const ConstantL&, const ConstantL&) = default;
};

/// State-dependent filter gains sitting `margin` above the Lyapunov bound
/// (|ω̂| + ω_M)(1 + (k/Jm)(1 + 2k/Jm)).
struct TheoremL {
  double margin{0.0};
  friend bool operator==(const TheoremL&, const TheoremL&) = default;
};

using LMode = std::variant<ConstantL, TheoremL>;

struct Gains {
  double k1{0.0};
  double k2{0.0};
  LMode l_mode{ConstantL{}};

  /// Throws DomainError unless k1, k2 > 0, constant l > 0 and margin >= 0.
  void validate() const;

  friend bool operator==(const Gains&, const Gains&) = default;
};

/// Observer internal state on R³×R³×R³. The filtered rows are never
/// normalized.
struct ObserverState {
  Vec3 xi;
  Vec3 rhat1;
  Vec3 rhat2;
  friend bool operator==(const ObserverState&, const ObserverState&) = default;
};

struct ObserverRates {
  Vec3 dxi;
  Vec3 drhat1;
  Vec3 drhat2;
};

struct FilterGains {
  double l1{0.0};
  double l2{0.0};
};

/// Output-map correction β = J⁻¹(k1 r1×r̂1 + k2 r2×r̂2).
///
/// The orientation of the cross products is the one for which the ξ̇ law
/// below cancels every ω-dependent term in d/dt(ω̂ − ω), leaving
/// ż = J⁻¹(k1 r̂1× r1× + k2 r̂2× r2×) z + (rigid-body coupling).
/// Swapping them turns the r_i×² terms destabilizing.
Vec3 beta(const Vec3& r1, const Vec3& r2, const Vec3& rhat1, const Vec3& rhat2, const Gains& g,
          const PhysicalParams& p);

/// ω̂ = ξ + β.
Vec3 omega_hat(const ObserverState& s, const Vec3& r1, const Vec3& r2, const Gains& g,
               const PhysicalParams& p);

/// Right-hand side of the filter-gain inequality for a single k.
double l_bound(double k, double omega_hat_norm, const PhysicalParams& p);

FilterGains l_gains(const Gains& g, const Vec3& omega_hat, const PhysicalParams& p);

/// ξ̇ split into its additive parts, summed in declaration order.
struct XiRateTerms {
  Vec3 coupling1;   // −k1 J⁻¹ (r1× r̂1× − r̂1× r1×) ω̂
  Vec3 coupling2;   // −k2 J⁻¹ (r2× r̂2× − r̂2× r2×) ω̂
  Vec3 injection1;  // l1 k1 J⁻¹ r1 × (r̂1 − r1)
  Vec3 injection2;  // l2 k2 J⁻¹ r2 × (r̂2 − r2)
  Vec3 rigid_body;  // J⁻¹ ((Jω̂) × ω̂ + τ)

  Vec3 sum() const { return coupling1 + coupling2 + injection1 + injection2 + rigid_body; }
};

XiRateTerms xi_rate_terms(const ObserverState& s, const Vec3& r1, const Vec3& r2, const Vec3& tau,
                          const Gains& g, const PhysicalParams& p);

ObserverRates observer_rates(const ObserverState& s, const Vec3& r1, const Vec3& r2, const Vec3& tau,
                             const Gains& g, const PhysicalParams& p);

struct Stiffness {
  Mat3 M;
  double mu{0.0};
};

/// M = −k1 r1×² − k2 r2×² and its smallest eigenvalue. Positive definite
/// exactly when r1, r2 are linearly independent (and k1, k2 > 0).
Stiffness stiffness_mu(const Vec3& r1, const Vec3& r2, double k1, double k2);

struct GainReport {
  double mu{0.0};
  double gain1_threshold_nominal{0.0};   // ω_M + 3/2
  double gain1_threshold_strict{0.0};  // J_M (ω_M + 3/2)
  bool gain1_nominal{false};
  bool gain1_strict{false};
  double omega_hat_bound{0.0};
  double l1{0.0};  // effective gains at |ω̂| = omega_hat_bound
  double l2{0.0};
  double l_bound1{0.0};
  double l_bound2{0.0};
  bool gain2_ok{false};
  bool gain3_ok{false};
  double suggested_k{0.0};

  bool satisfied() const { return gain1_strict && gain2_ok && gain3_ok; }
};

/// Smallest k meeting the strict stiffness condition with unit slack:
/// 1 + (ω_M + 3/2) J_M.
double suggested_k(const PhysicalParams& p);

/// Evaluates the sufficient gain conditions at the attitude rows (r1, r2)
/// with the filter gains taken at |ω̂| = omega_hat_bound. All inequalities
/// are strict. Throws DomainError for a negative bound.
GainReport check_conditions(const Gains& g, const PhysicalParams& p, const Vec3& r1, const Vec3& r2,
                            double omega_hat_bound);

}  // namespace angvel
