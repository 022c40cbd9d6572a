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

// Independent oracles and random generators shared by the unit tests and
// the acceptance binary. No test-framework dependency.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "angvel/lin3.hpp"

namespace angvel::testing {

/// Cyclic Jacobi eigenvalue iteration for a symmetric 3x3 matrix. Kept
/// deliberately separate from the closed-form solver in the library.
inline std::array<double, 3> jacobi_eigenvalues(Mat3 a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (off < 1e-300) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Mat3 g = Mat3::identity();
        g(p, p) = c;
        g(q, q) = c;
        g(p, q) = s;
        g(q, p) = -s;
        a = transpose(g) * a * g;
      }
    }
  }
  std::array<double, 3> ev{a(0, 0), a(1, 1), a(2, 2)};
  std::sort(ev.begin(), ev.end());
  return ev;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

  Vec3 vec(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)}; }

  Vec3 unit() {
    while (true) {
      const Vec3 v = vec(-1.0, 1.0);
      const double n = norm(v);
      if (n > 0.1 && n <= 1.0) return v / n;
    }
  }

  Mat3 rotation() { return rodrigues(uniform(0.0, 3.14) * unit()); }

  Mat3 symmetric(double lo, double hi) {
    Mat3 m;
    for (int r = 0; r < 3; ++r)
      for (int c = r; c < 3; ++c) m(r, c) = m(c, r) = uniform(lo, hi);
    return m;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace angvel::testing
