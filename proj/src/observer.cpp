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
#include "angvel/observer.hpp"

#include <cmath>

#include "angvel/error.hpp"

namespace angvel {

void Gains::validate() const {
  if (!(k1 > 0.0) || !(k2 > 0.0) || !std::isfinite(k1) || !std::isfinite(k2)) {
    throw DomainError("gains k1, k2 must be positive and finite");
  }
  if (const auto* c = std::get_if<ConstantL>(&l_mode)) {
    if (!(c->l1 > 0.0) || !(c->l2 > 0.0) || !std::isfinite(c->l1) || !std::isfinite(c->l2)) {
      throw DomainError("constant filter gains l1, l2 must be positive and finite");
    }
  } else {
    const double m = std::get<TheoremL>(l_mode).margin;
    if (!(m >= 0.0) || !std::isfinite(m)) throw DomainError("l_margin must be non-negative");
  }
}

Vec3 beta(const Vec3& r1, const Vec3& r2, const Vec3& rhat1, const Vec3& rhat2, const Gains& g,
          const PhysicalParams& p) {
  return p.J_inv * (g.k1 * cross(r1, rhat1) + g.k2 * cross(r2, rhat2));
}

Vec3 omega_hat(const ObserverState& s, const Vec3& r1, const Vec3& r2, const Gains& g,
               const PhysicalParams& p) {
  return s.xi + beta(r1, r2, s.rhat1, s.rhat2, g, p);
}

double l_bound(double k, double omega_hat_norm, const PhysicalParams& p) {
  const double ratio = k / p.Jm;
  return (omega_hat_norm + p.omega_M) * (1.0 + ratio * (1.0 + 2.0 * ratio));
}

FilterGains l_gains(const Gains& g, const Vec3& omega_hat, const PhysicalParams& p) {
  if (const auto* c = std::get_if<ConstantL>(&g.l_mode)) return {c->l1, c->l2};
  const double margin = std::get<TheoremL>(g.l_mode).margin;
  const double w = norm(omega_hat);
  return {l_bound(g.k1, w, p) + margin, l_bound(g.k2, w, p) + margin};
}

namespace {

Vec3 coupling(double k, const Vec3& r, const Vec3& rhat, const Vec3& w, const PhysicalParams& p) {
  const Mat3 sr = skew(r), sh = skew(rhat);
  return p.J_inv * (-k * ((sr * sh - sh * sr) * w));
}

Vec3 injection(double l, double k, const Vec3& r, const Vec3& rhat, const PhysicalParams& p) {
  return p.J_inv * ((l * k) * cross(r, rhat - r));
}

}  // namespace

XiRateTerms xi_rate_terms(const ObserverState& s, const Vec3& r1, const Vec3& r2, const Vec3& tau,
                          const Gains& g, const PhysicalParams& p) {
  const Vec3 w = omega_hat(s, r1, r2, g, p);
  const FilterGains l = l_gains(g, w, p);
  return {coupling(g.k1, r1, s.rhat1, w, p), coupling(g.k2, r2, s.rhat2, w, p),
          injection(l.l1, g.k1, r1, s.rhat1, p), injection(l.l2, g.k2, r2, s.rhat2, p),
          p.J_inv * (cross(p.J * w, w) + tau)};
}

ObserverRates observer_rates(const ObserverState& s, const Vec3& r1, const Vec3& r2, const Vec3& tau,
                             const Gains& g, const PhysicalParams& p) {
  const Vec3 w = omega_hat(s, r1, r2, g, p);
  const FilterGains l = l_gains(g, w, p);
  const XiRateTerms terms{coupling(g.k1, r1, s.rhat1, w, p), coupling(g.k2, r2, s.rhat2, w, p),
                          injection(l.l1, g.k1, r1, s.rhat1, p), injection(l.l2, g.k2, r2, s.rhat2, p),
                          p.J_inv * (cross(p.J * w, w) + tau)};
  return {terms.sum(), cross(s.rhat1, w) - l.l1 * (s.rhat1 - r1),
          cross(s.rhat2, w) - l.l2 * (s.rhat2 - r2)};
}

Stiffness stiffness_mu(const Vec3& r1, const Vec3& r2, double k1, double k2) {
  const Mat3 s1 = skew(r1), s2 = skew(r2);
  const Mat3 m = (-k1) * (s1 * s1) - k2 * (s2 * s2);
  return {m, lambda_min_sym(m)};
}

double suggested_k(const PhysicalParams& p) { return 1.0 + (p.omega_M + 1.5) * p.JM; }

GainReport check_conditions(const Gains& g, const PhysicalParams& p, const Vec3& r1, const Vec3& r2,
                            double omega_hat_bound) {
  if (!(omega_hat_bound >= 0.0)) throw DomainError("omega_hat_bound must be non-negative");

  GainReport rep;
  rep.mu = stiffness_mu(r1, r2, g.k1, g.k2).mu;
  rep.gain1_threshold_nominal = p.omega_M + 1.5;
  rep.gain1_threshold_strict = p.JM * (p.omega_M + 1.5);
  rep.gain1_nominal = rep.mu > rep.gain1_threshold_nominal;
  rep.gain1_strict = rep.mu > rep.gain1_threshold_strict;

  rep.omega_hat_bound = omega_hat_bound;
  rep.l_bound1 = l_bound(g.k1, omega_hat_bound, p);
  rep.l_bound2 = l_bound(g.k2, omega_hat_bound, p);
  // Any vector of the right norm gives the same gains.
  const FilterGains l = l_gains(g, Vec3{omega_hat_bound, 0.0, 0.0}, p);
  rep.l1 = l.l1;
  rep.l2 = l.l2;
  rep.gain2_ok = rep.l1 > rep.l_bound1;
  rep.gain3_ok = rep.l2 > rep.l_bound2;
  rep.suggested_k = suggested_k(p);
  return rep;
}

}  // namespace angvel
