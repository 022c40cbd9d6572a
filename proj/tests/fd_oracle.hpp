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

// Finite-difference oracle for the closed-form error dynamics: integrate
// the coupled plant+observer system a step forward and a step backward
// and difference the resulting errors.

#include "angvel/lyapunov.hpp"
#include "angvel/rk4.hpp"
#include "angvel/sim.hpp"
#include "oracles.hpp"

namespace angvel::testing {

struct FdComparison {
  double z_rel{0.0};
  double e1_rel{0.0};
  double e2_rel{0.0};
  double stacked_rel{0.0};  // over the 9-vector (ż, ė1, ė2)

  double worst() const { return std::max({z_rel, e1_rel, e2_rel}); }
};

inline ErrorState error_of(const CoupledState& x, const Scenario& sc) {
  const Vec3 w = omega_hat(x.observer, x.plant.r1, x.plant.r2, sc.gains, sc.params);
  return errors(w, x.plant.omega, x.observer.rhat1, x.plant.r1, x.observer.rhat2, x.plant.r2);
}

inline FdComparison compare_with_central_difference(const CoupledState& x, double t, const Scenario& sc,
                                                    double h) {
  const auto f = [&sc](double s, const CoupledState& y) { return coupled_rates(s, y, sc); };
  const ErrorState ep = error_of(rk4(f, t, x, h), sc);
  const ErrorState em = error_of(rk4(f, t, x, -h), sc);
  const ErrorState e0 = error_of(x, sc);

  const Vec3 w = omega_hat(x.observer, x.plant.r1, x.plant.r2, sc.gains, sc.params);
  const FilterGains l = l_gains(sc.gains, w, sc.params);
  const Vec3 z_rate = z_rate_explicit(e0, x.plant.r1, x.plant.r2, x.plant.omega, sc.gains, sc.params);
  const FilterErrorRates e_rate = e_rate_explicit(e0, x.plant.r1, x.plant.r2, w, l.l1, l.l2);

  const Vec3 dz = (ep.z - em.z) / (2.0 * h) - z_rate;
  const Vec3 de1 = (ep.e1 - em.e1) / (2.0 * h) - e_rate.de1;
  const Vec3 de2 = (ep.e2 - em.e2) / (2.0 * h) - e_rate.de2;
  const double scale = std::sqrt(dot(z_rate, z_rate) + dot(e_rate.de1, e_rate.de1) + dot(e_rate.de2, e_rate.de2));
  return {norm(dz) / norm(z_rate), norm(de1) / norm(e_rate.de1), norm(de2) / norm(e_rate.de2),
          std::sqrt(dot(dz, dz) + dot(de1, de1) + dot(de2, de2)) / scale};
}

/// Random closed-loop state: arbitrary attitude, |ω| < 3, filtered rows
/// off the sphere, estimate error of order one.
inline CoupledState random_closed_loop_state(Rng& rng, const Scenario& sc) {
  const Mat3 r = rng.rotation();
  PlantState plant = PlantState::from_rotation(r, rng.vec(-1.7, 1.7));
  const Vec3 rh1 = plant.r1 + rng.vec(-0.5, 0.5);
  const Vec3 rh2 = plant.r2 + rng.vec(-0.5, 0.5);
  const Vec3 w_hat = plant.omega + rng.vec(-1.0, 1.0);
  const Vec3 xi = w_hat - beta(plant.r1, plant.r2, rh1, rh2, sc.gains, sc.params);
  return {plant, {xi, rh1, rh2}};
}

}  // namespace angvel::testing
