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

namespace angvel {

/// One classical fourth-order Runge-Kutta step for ẋ = f(t, x). `State`
/// needs State + State and double * State; the derivative has the same type.
template <class State, class Rhs>
State rk4(const Rhs& f, double t, const State& x, double h) {
  const double half = 0.5 * h;
  const State k1 = f(t, x);
  const State k2 = f(t + half, x + half * k1);
  const State k3 = f(t + half, x + half * k2);
  const State k4 = f(t + h, x + h * k3);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace angvel
