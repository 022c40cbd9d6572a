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
#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "angvel/analysis.hpp"
#include "angvel/error.hpp"
#include "support.hpp"

namespace angvel {
namespace {

std::vector<TimedValue> sampled(double (*f)(double), double t0, double t1, int n) {
  std::vector<TimedValue> out;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + (t1 - t0) * i / n;
    out.push_back({t, f(t)});
  }
  return out;
}

TEST(FitRate, PureExponential) {
  const auto v = sampled([](double t) { return std::exp(-2.0 * t); }, 0.0, 5.0, 100);
  const RateFit f = fit_rate(v, 0.0, 5.0);
  EXPECT_NEAR(f.lambda, 2.0, 1e-12);
  EXPECT_NEAR(f.log_c, 0.0, 1e-12);
  EXPECT_NEAR(f.r_squared, 1.0, 1e-12);
  EXPECT_EQ(f.n_points, 101u);
  EXPECT_FALSE(f.flat);
}

TEST(FitRate, ScaledExponential) {
  const auto v = sampled([](double t) { return 3.0 * std::exp(-0.7 * t); }, 0.0, 10.0, 50);
  const RateFit f = fit_rate(v, 0.0, 10.0);
  EXPECT_NEAR(f.lambda, 0.7, 1e-12);
  EXPECT_NEAR(f.log_c, std::log(3.0), 1e-12);
}

TEST(FitRate, WindowSelectsSamples) {
  const auto v = sampled([](double t) { return t < 2.0 ? 1.0 : std::exp(-(t - 2.0)); }, 0.0, 4.0, 40);
  const RateFit f = fit_rate(v, 2.0, 4.0);
  EXPECT_EQ(f.n_points, 21u);
  EXPECT_NEAR(f.lambda, 1.0, 1e-12);
}

TEST(FitRate, FlatSeries) {
  const std::vector<TimedValue> v{{0, 2}, {1, 2}, {2, 2}};
  const RateFit f = fit_rate(v, 0, 2);
  EXPECT_TRUE(f.flat);
  EXPECT_EQ(f.lambda, 0.0);
  EXPECT_EQ(f.r_squared, 1.0);
}

TEST(FitRate, SkipsNumericalZeros) {
  const std::vector<TimedValue> v{{0, 1.0}, {1, std::exp(-1.0)}, {2, 0.0}, {3, 1e-13}, {4, -1.0}};
  const RateFit f = fit_rate(v, 0, 4);
  EXPECT_EQ(f.n_points, 2u);
  EXPECT_NEAR(f.lambda, 1.0, 1e-14);
}

TEST(FitRate, NeedsTwoPoints) {
  const std::vector<TimedValue> one{{0, 1.0}, {1, 0.0}};
  EXPECT_THROW(fit_rate(one, 0, 1), DomainError);
  EXPECT_THROW(fit_rate({}, 0, 1), DomainError);
  const std::vector<TimedValue> outside{{5, 1.0}, {6, 0.5}};
  EXPECT_THROW(fit_rate(outside, 0, 1), DomainError);
}

TEST(FitRate, InvariantUnderScalingAndShift) {
  testing::Rng rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<TimedValue> v;
    for (int i = 0; i < 30; ++i) v.push_back({0.1 * i, rng.uniform(1e-3, 10.0)});
    const double scale = rng.uniform(1e-3, 1e3);
    const double shift = rng.uniform(-5, 5);
    std::vector<TimedValue> w;
    for (const auto& s : v) w.push_back({s.t + shift, scale * s.v});
    const RateFit a = fit_rate(v, 0.0, 3.0);
    const RateFit b = fit_rate(w, shift, 3.0 + shift);
    EXPECT_NEAR(a.lambda, b.lambda, 1e-9 * (1 + std::abs(a.lambda)));
    EXPECT_NEAR(a.r_squared, b.r_squared, 1e-9);
    EXPECT_GE(a.r_squared, 0.0);
    EXPECT_LE(a.r_squared, 1.0 + 1e-12);
  }
}

TEST(Conservation, SingleSampleHasNoDrift) {
  Scenario sc = reference_scenario();
  sc.t_final = sc.dt;
  Trajectory traj = run(sc);
  traj.samples.resize(1);
  const ConservationReport r = conservation_report(traj, sc.params);
  EXPECT_EQ(r.max_rel_energy_drift, 0.0);
  EXPECT_EQ(r.max_rel_momentum_drift, 0.0);
}

TEST(Conservation, ReferenceRunKeepsInvariants) {
  const Scenario sc = reference_scenario();
  const ConservationReport r = conservation_report(run(sc), sc.params);
  EXPECT_LE(r.max_rel_energy_drift, 1e-8);
  EXPECT_LE(r.max_rel_momentum_drift, 1e-8);
}

TEST(Conservation, PrincipalAxisSpinIsExact) {
  Scenario sc = reference_scenario();
  sc.omega0 = {0, 0, 1.5};
  sc.t_final = 1.0;
  const ConservationReport r = conservation_report(run(sc), sc.params);
  EXPECT_EQ(r.max_rel_energy_drift, 0.0);
  EXPECT_EQ(r.max_rel_momentum_drift, 0.0);
}

TEST(Conservation, ConstantTorqueBreaksInvariants) {
  Scenario sc = reference_scenario();
  sc.torque_profile = ConstantTorque{{0.5, 0, 0}};
  sc.t_final = 1.0;
  EXPECT_GT(conservation_report(run(sc), sc.params).max_rel_energy_drift, 1e-3);
}

TEST(OrthonormalityDrift, MaxOverSamples) {
  Trajectory traj;
  EXPECT_THROW(orthonormality_drift(traj), DomainError);
  traj.samples.resize(3);
  traj.samples[1].drift = 2e-16;
  traj.samples[2].drift = 1e-16;
  EXPECT_EQ(orthonormality_drift(traj), 2e-16);
}

}  // namespace
}  // namespace angvel
