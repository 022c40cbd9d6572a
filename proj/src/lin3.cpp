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
#include "angvel/lin3.hpp"

#include <algorithm>
#include <numbers>

#include "angvel/error.hpp"

namespace angvel {

double max_abs(const Mat3& a) {
  double out = 0.0;
  for (double v : a.m) out = std::max(out, std::abs(v));
  return out;
}

bool is_finite(const Mat3& a) {
  return std::all_of(a.m.begin(), a.m.end(), [](double v) { return std::isfinite(v); });
}

bool is_symmetric(const Mat3& a, double tol) {
  return std::abs(a(0, 1) - a(1, 0)) <= tol && std::abs(a(0, 2) - a(2, 0)) <= tol &&
         std::abs(a(1, 2) - a(2, 1)) <= tol;
}

Mat3 inverse(const Mat3& a) {
  const Vec3 r0 = a.row(0), r1 = a.row(1), r2 = a.row(2);
  const double d = det(a);
  const double s = max_abs(a);
  if (!std::isfinite(d) || std::abs(d) <= 1e-14 * s * s * s) {
    throw DomainError("inverse: matrix is singular or not finite");
  }
  // Columns of the inverse are the pairwise row cross products over det.
  const Vec3 c0 = cross(r1, r2), c1 = cross(r2, r0), c2 = cross(r0, r1);
  return {{c0.x / d, c1.x / d, c2.x / d, c0.y / d, c1.y / d, c2.y / d, c0.z / d, c1.z / d, c2.z / d}};
}

double orthonormality_error(const Mat3& a) {
  const Mat3 g = transpose(a) * a - Mat3::identity();
  double out = 0.0;
  for (int r = 0; r < 3; ++r) out = std::max(out, std::abs(g(r, 0)) + std::abs(g(r, 1)) + std::abs(g(r, 2)));
  return out;
}

Mat3 rodrigues(const Vec3& w) {
  const double theta = norm(w);
  const Mat3 k = skew(w);
  const Mat3 k2 = k * k;
  if (theta < kSmallAngle) return Mat3::identity() + k + 0.5 * k2;
  // (1 - cos θ)/θ² written as 2 sin²(θ/2)/θ² to avoid cancellation.
  const double h = std::sin(0.5 * theta);
  const double a = std::sin(theta) / theta;
  const double b = 2.0 * h * h / (theta * theta);
  return Mat3::identity() + a * k + b * k2;
}

namespace {

// Unit vector orthogonal to unit v.
Vec3 any_orthogonal(const Vec3& v) {
  if (std::abs(v.x) > std::abs(v.y)) {
    const double inv = 1.0 / std::sqrt(v.x * v.x + v.z * v.z);
    return {-v.z * inv, 0.0, v.x * inv};
  }
  const double inv = 1.0 / std::sqrt(v.y * v.y + v.z * v.z);
  return {0.0, v.z * inv, -v.y * inv};
}

}  // namespace

std::array<double, 3> eigenvalues_sym(const Mat3& in) {
  if (!is_finite(in)) throw DomainError("eigenvalues_sym: non-finite entry");

  const double scale = max_abs(in);
  if (scale == 0.0) return {0.0, 0.0, 0.0};

  // Symmetrize and normalize so the largest entry has magnitude 1.
  Mat3 a;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) a(r, c) = 0.5 * (in(r, c) + in(c, r)) / scale;

  std::array<double, 3> ev{};
  const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  if (off == 0.0) {
    ev = {a(0, 0), a(1, 1), a(2, 2)};
  } else {
    const double q = trace(a) / 3.0;
    Mat3 b = a;
    b(0, 0) -= q;
    b(1, 1) -= q;
    b(2, 2) -= q;
    const double p2 = b(0, 0) * b(0, 0) + b(1, 1) * b(1, 1) + b(2, 2) * b(2, 2) + 2.0 * off;
    const double p = std::sqrt(p2 / 6.0);
    const double r = std::clamp(det(b) / (2.0 * p * p * p), -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;

    // For r >= 0 the largest root is isolated from the other two, otherwise
    // the smallest is. That root is insensitive to rounding in acos.
    const double sep = r >= 0.0 ? 2.0 * p * std::cos(phi)
                                : 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);

    Mat3 c = b;
    c(0, 0) -= sep;
    c(1, 1) -= sep;
    c(2, 2) -= sep;
    const std::array<Vec3, 3> cand{cross(c.row(0), c.row(1)), cross(c.row(0), c.row(2)),
                                   cross(c.row(1), c.row(2))};
    Vec3 v = cand[0];
    for (const Vec3& x : cand)
      if (dot(x, x) > dot(v, v)) v = x;
    v = v / norm(v);

    const Vec3 u = any_orthogonal(v);
    const Vec3 w = cross(v, u);
    const Vec3 bu = b * u, bw = b * w;
    const double buu = dot(u, bu), bww = dot(w, bw), buw = 0.5 * (dot(u, bw) + dot(w, bu));
    const double mid = 0.5 * (buu + bww);
    const double rad = std::hypot(0.5 * (buu - bww), buw);
    ev = {q + sep, q + mid - rad, q + mid + rad};
  }

  std::sort(ev.begin(), ev.end());
  for (double& e : ev) e *= scale;
  return ev;
}

}  // namespace angvel
