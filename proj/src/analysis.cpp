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
#include "angvel/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "angvel/error.hpp"

namespace angvel {

RateFit fit_rate(std::span<const TimedValue> samples, double t0, double t1) {
  std::vector<TimedValue> pts;
  for (const TimedValue& s : samples) {
    if (s.t >= t0 && s.t <= t1 && s.v > kFitFloor && std::isfinite(s.v)) pts.push_back({s.t, std::log(s.v)});
  }
  if (pts.size() < 2) throw DomainError("fit_rate: fewer than two usable samples in window");

  // Centered sums keep the normal equations well conditioned.
  const double n = static_cast<double>(pts.size());
  double mt = 0.0, my = 0.0;
  for (const auto& p : pts) {
    mt += p.t;
    my += p.v;
  }
  mt /= n;
  my /= n;
  double stt = 0.0, sty = 0.0, syy = 0.0;
  for (const auto& p : pts) {
    stt += (p.t - mt) * (p.t - mt);
    sty += (p.t - mt) * (p.v - my);
    syy += (p.v - my) * (p.v - my);
  }
  if (!(stt > 0.0)) throw DomainError("fit_rate: all usable samples share one time stamp");

  const double slope = sty / stt;
  RateFit fit;
  fit.lambda = -slope;
  fit.log_c = my - slope * mt;
  fit.n_points = pts.size();

  double ss_res = 0.0;
  for (const auto& p : pts) {
    const double r = p.v - (fit.log_c + slope * p.t);
    ss_res += r * r;
  }
  if (syy == 0.0) {
    fit.flat = true;
    fit.r_squared = 1.0;
  } else {
    fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  }
  return fit;
}

ConservationReport conservation_report(const Trajectory& traj, const PhysicalParams& p) {
  if (traj.samples.empty()) throw DomainError("conservation_report: empty trajectory");
  const Casimirs c0 = casimirs(traj.samples.front().plant, p);
  const double e_ref = std::max(std::abs(c0.energy), 1e-12);
  const double m_ref = std::max(std::abs(c0.momentum_norm), 1e-12);
  ConservationReport rep;
  for (const Sample& s : traj.samples) {
    const Casimirs c = casimirs(s.plant, p);
    rep.max_rel_energy_drift = std::max(rep.max_rel_energy_drift, std::abs(c.energy - c0.energy) / e_ref);
    rep.max_rel_momentum_drift =
        std::max(rep.max_rel_momentum_drift, std::abs(c.momentum_norm - c0.momentum_norm) / m_ref);
  }
  return rep;
}

double orthonormality_drift(const Trajectory& traj) {
  if (traj.samples.empty()) throw DomainError("orthonormality_drift: empty trajectory");
  double out = 0.0;
  for (const Sample& s : traj.samples) out = std::max(out, s.drift);
  return out;
}

}  // namespace angvel
