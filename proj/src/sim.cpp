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
#include "angvel/sim.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "angvel/error.hpp"
#include "angvel/rk4.hpp"

namespace angvel {

void Scenario::validate() const {
  if (!(params.Jm > 0.0) || !(params.JM >= params.Jm) || !(params.omega_M > 0.0)) {
    throw DomainError("physical parameters violate 0 < Jm <= JM, omega_M > 0");
  }
  gains.validate();
  if (!is_finite(omega0) || !is_finite(rhat1_0) || !is_finite(rhat2_0) || (xi0 && !is_finite(*xi0))) {
    throw DomainError("initial conditions must be finite");
  }
  if (!is_finite(R0) || orthonormality_error(R0) > 1e-9 || !(det(R0) > 0.0)) {
    throw DomainError("R0 is not a rotation matrix (rows must be orthonormal to 1e-9, det > 0)");
  }
  if (const auto* s = std::get_if<SinusoidTorque>(&torque_profile)) {
    if (!(s->freq >= 0.0) || !is_finite(s->amp) || !std::isfinite(s->phase)) {
      throw DomainError("sinusoid torque needs finite amplitude and phase and freq >= 0");
    }
  } else if (const auto* c = std::get_if<ConstantTorque>(&torque_profile)) {
    if (!is_finite(c->value)) throw DomainError("constant torque must be finite");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (!(t_final > 0.0) || !std::isfinite(t_final)) throw DomainError("t_final must be positive");
  if (dt > t_final) throw DomainError("dt must not exceed t_final");
  const double n = t_final / dt;
  if (std::abs(n - std::round(n)) > 1e-6 * n) throw DomainError("t_final must be a whole multiple of dt");
  if (record_every < 1) throw DomainError("record_every must be >= 1");
  if (!(omega_hat_bound >= 0.0)) throw DomainError("omega_hat_bound must be non-negative");
}

std::vector<std::string> Scenario::warnings() const {
  std::vector<std::string> out;
  const FilterGains l = l_gains(gains, Vec3{omega_hat_bound, 0.0, 0.0}, params);
  const double stiff = dt * std::max(l.l1, l.l2);
  if (stiff > 0.1) {
    out.push_back("dt * max(l1, l2) = " + std::to_string(stiff) +
                  " exceeds 0.1; explicit RK4 may be inaccurate or unstable");
  }
  if (norm(omega0) > params.omega_M) out.push_back("|omega0| exceeds omega_max");
  return out;
}

long long Scenario::steps() const { return std::llround(t_final / dt); }

Scenario reference_scenario() {
  Scenario sc;
  sc.params = PhysicalParams::make(Mat3::diag(3.0, 2.0, 1.0), 3.0);
  sc.gains = Gains{14.5, 14.5, ConstantL{1.0, 1.0}};
  sc.torque_profile = ZeroTorque{};
  sc.omega0 = {2.0, -1.0, 0.6};
  sc.R0 = Mat3::identity();
  sc.rhat1_0 = {0.0, -1.0, 0.0};
  sc.rhat2_0 = {0.0, 0.0, -1.0};
  sc.xi0 = std::nullopt;
  sc.dt = 1e-3;
  sc.t_final = 10.0;
  sc.record_every = 1;
  sc.omega_hat_bound = 2.0 * sc.params.omega_M;
  return sc;
}

Scenario reference_theorem_scenario() {
  Scenario sc = reference_scenario();
  sc.gains.l_mode = TheoremL{1.0};
  sc.dt = 1e-5;
  sc.t_final = 0.05;
  return sc;
}

Vec3 init_xi(const Scenario& sc) {
  if (sc.xi0) return *sc.xi0;
  return -beta(sc.R0.row(0), sc.R0.row(1), sc.rhat1_0, sc.rhat2_0, sc.gains, sc.params);
}

CoupledState operator+(const CoupledState& a, const CoupledState& b) {
  return {{a.plant.r1 + b.plant.r1, a.plant.r2 + b.plant.r2, a.plant.r3 + b.plant.r3,
           a.plant.omega + b.plant.omega},
          {a.observer.xi + b.observer.xi, a.observer.rhat1 + b.observer.rhat1,
           a.observer.rhat2 + b.observer.rhat2}};
}

CoupledState operator*(double s, const CoupledState& a) {
  return {{s * a.plant.r1, s * a.plant.r2, s * a.plant.r3, s * a.plant.omega},
          {s * a.observer.xi, s * a.observer.rhat1, s * a.observer.rhat2}};
}

CoupledState coupled_rates(double t, const CoupledState& x, const Scenario& sc) {
  const Vec3 tau = torque(sc.torque_profile, t);
  const PlantRates pr = plant_rates(x.plant, tau, sc.params);
  const ObserverRates orr = observer_rates(x.observer, x.plant.r1, x.plant.r2, tau, sc.gains, sc.params);
  return {{pr.dr1, pr.dr2, pr.dr3, pr.domega}, {orr.dxi, orr.drhat1, orr.drhat2}};
}

ProjectedRows project_rows(const Vec3& r1, const Vec3& r2) {
  if (!(norm(cross(r1, r2)) > 1e-6)) throw DomainError("attitude rows are (nearly) parallel");
  const double n1 = norm(r1);
  const double n2 = norm(r2);
  const double drift = std::max({std::abs(n1 - 1.0), std::abs(n2 - 1.0), std::abs(dot(r1, r2))});

  const Vec3 u1 = r1 / n1;
  const Vec3 w = r2 - dot(r2, u1) * u1;
  const Vec3 u2 = w / norm(w);
  return {u1, u2, cross(u1, u2), drift};
}

namespace {

bool is_finite(const CoupledState& x) {
  return angvel::is_finite(x.plant.r1) && angvel::is_finite(x.plant.r2) &&
         angvel::is_finite(x.plant.r3) && angvel::is_finite(x.plant.omega) &&
         angvel::is_finite(x.observer.xi) && angvel::is_finite(x.observer.rhat1) &&
         angvel::is_finite(x.observer.rhat2);
}

}  // namespace

StepResult rk4_step(const PlantState& plant, const ObserverState& obs, double t, const Scenario& sc) {
  const auto f = [&sc](double s, const CoupledState& x) { return coupled_rates(s, x, sc); };
  const CoupledState next = rk4(f, t, CoupledState{plant, obs}, sc.dt);
  const double t_next = t + sc.dt;
  if (!is_finite(next)) throw IntegrationError("non-finite state", t_next);

  ProjectedRows rows;
  try {
    rows = project_rows(next.plant.r1, next.plant.r2);
  } catch (const DomainError& e) {
    throw IntegrationError(e.what(), t_next);
  }
  return {{rows.r1, rows.r2, rows.r3, next.plant.omega}, next.observer, rows.drift};
}

namespace {

Sample make_sample(double t, const PlantState& x, const ObserverState& s, double drift,
                   const Scenario& sc) {
  Sample out;
  out.t = t;
  out.plant = x;
  out.observer = s;
  out.omega_hat = omega_hat(s, x.r1, x.r2, sc.gains, sc.params);
  out.error = errors(out.omega_hat, x.omega, s.rhat1, x.r1, s.rhat2, x.r2);
  out.lyapunov = v_total(out.error, sc.params);
  out.drift = drift;
  out.a2_violation = norm(x.omega) > sc.params.omega_M;
  return out;
}

}  // namespace

Trajectory run(const Scenario& sc) {
  sc.validate();
  const bool theorem_mode = std::holds_alternative<TheoremL>(sc.gains.l_mode);

  PlantState plant = PlantState::from_rotation(sc.R0, sc.omega0);
  ObserverState obs{init_xi(sc), sc.rhat1_0, sc.rhat2_0};

  const long long n = sc.steps();
  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n / sc.record_every + 1));

  const auto record = [&](const Sample& smp) {
    if (smp.a2_violation) ++traj.a2_violations;
    traj.samples.push_back(smp);
  };
  record(make_sample(0.0, plant, obs, 0.0, sc));

  double drift = 0.0;
  for (long long i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * sc.dt;
    const StepResult step = rk4_step(plant, obs, t, sc);
    plant = step.plant;
    obs = step.observer;
    drift = std::max(drift, step.drift);
    if ((i + 1) % sc.record_every == 0) {
      Sample smp = make_sample(static_cast<double>(i + 1) * sc.dt, plant, obs, drift, sc);
      if (theorem_mode && decrement_violated(traj.samples.back().lyapunov, smp.lyapunov)) {
        smp.v_increase = true;
        ++traj.v_increases;
      }
      record(smp);
      drift = 0.0;
    }
  }
  return traj;
}

}  // namespace angvel
