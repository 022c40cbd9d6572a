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
#include "angvel/lyapunov.hpp"

namespace angvel {

ErrorState errors(const Vec3& omega_hat, const Vec3& omega, const Vec3& rhat1, const Vec3& r1,
                  const Vec3& rhat2, const Vec3& r2) {
  return {omega_hat - omega, rhat1 - r1, rhat2 - r2};
}

LyapunovSample v_total(const ErrorState& err, const PhysicalParams& p) {
  const double vz = norm(p.J * err.z);
  const double ve = 0.5 * (dot(err.e1, err.e1) + dot(err.e2, err.e2));
  return {vz, ve, vz + ve};
}

Vec3 z_rate_explicit(const ErrorState& err, const Vec3& r1, const Vec3& r2, const Vec3& omega,
                     const Gains& g, const PhysicalParams& p) {
  const Vec3& z = err.z;
  const Mat3 s1 = skew(r1), s2 = skew(r2);

  const Vec3 stiffness = p.J_inv * ((g.k1 * (s1 * s1) + g.k2 * (s2 * s2)) * z);
  const Vec3 jz = p.J * z;
  const Vec3 euler = p.J_inv * (cross(jz, z) + cross(p.J * omega, z) + cross(jz, omega));
  const Vec3 filter1 = p.J_inv * (g.k1 * ((skew(err.e1) * s1) * z));
  const Vec3 filter2 = p.J_inv * (g.k2 * ((skew(err.e2) * s2) * z));
  return stiffness + euler + filter1 + filter2;
}

FilterErrorRates e_rate_explicit(const ErrorState& err, const Vec3& r1, const Vec3& r2,
                                 const Vec3& omega_hat, double l1, double l2) {
  return {cross(r1, err.z) + cross(err.e1, omega_hat) - l1 * err.e1,
          cross(r2, err.z) + cross(err.e2, omega_hat) - l2 * err.e2};
}

}  // namespace angvel
