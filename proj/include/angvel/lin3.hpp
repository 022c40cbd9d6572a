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

#include <array>
#include <cmath>

/// Minimal 3D linear algebra: just what the rigid-body model and the observer
/// need. Every product uses a fixed left-to-right accumulation order so runs
/// are bit-reproducible across builds (the project is compiled with
/// -ffp-contract=off).
namespace angvel {

struct Vec3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
constexpr Vec3& operator+=(Vec3& a, const Vec3& b) { return a = a + b; }
constexpr Vec3& operator-=(Vec3& a, const Vec3& b) { return a = a - b; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

/// Right-handed cross product. Bit-identical to skew(a) * b.
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> m{};

  constexpr double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  constexpr double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }

  constexpr Vec3 row(int r) const { return {(*this)(r, 0), (*this)(r, 1), (*this)(r, 2)}; }
  constexpr Vec3 col(int c) const { return {(*this)(0, c), (*this)(1, c), (*this)(2, c)}; }

  static constexpr Mat3 zero() { return {}; }
  static constexpr Mat3 identity() { return diag(1.0, 1.0, 1.0); }
  static constexpr Mat3 diag(double a, double b, double c) {
    return {{a, 0.0, 0.0, 0.0, b, 0.0, 0.0, 0.0, c}};
  }
  static constexpr Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    return {{r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z}};
  }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

constexpr Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = a.m[i] + b.m[i];
  return out;
}
constexpr Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = a.m[i] - b.m[i];
  return out;
}
constexpr Mat3 operator*(double s, const Mat3& a) {
  Mat3 out;
  for (std::size_t i = 0; i < 9; ++i) out.m[i] = s * a.m[i];
  return out;
}

constexpr Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
          a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
          a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return out;
}

constexpr Mat3 transpose(const Mat3& a) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = a(c, r);
  return out;
}

constexpr Mat3 outer(const Vec3& a, const Vec3& b) {
  return Mat3::from_rows(a.x * b, a.y * b, a.z * b);
}

constexpr double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

constexpr double det(const Mat3& a) { return dot(a.row(0), cross(a.row(1), a.row(2))); }

double max_abs(const Mat3& a);
bool is_finite(const Mat3& a);
bool is_symmetric(const Mat3& a, double tol);

/// Inverse via the adjugate. Throws DomainError when |det| is not safely
/// nonzero relative to the entry scale.
Mat3 inverse(const Mat3& a);

/// ‖AᵀA − I‖∞ (max-abs entry); zero for an exact rotation.
double orthonormality_error(const Mat3& a);

/// The matrix a× with a× x = a × x.
constexpr Mat3 skew(const Vec3& a) {
  return {{0.0, -a.z, a.y, a.z, 0.0, -a.x, -a.y, a.x, 0.0}};
}

/// exp(w×). For |w| below kSmallAngle the second-order Taylor polynomial is
/// used instead of the sin/cos coefficients.
Mat3 rodrigues(const Vec3& w);
inline constexpr double kSmallAngle = 1e-12;

/// Eigenvalues of the symmetric part of `a`, ascending. Closed-form
/// trigonometric root of the characteristic cubic for the well-separated
/// eigenvalue, then an exact 2x2 solve on its orthogonal complement so that
/// (near-)repeated pairs keep full precision. Throws DomainError on
/// non-finite input.
std::array<double, 3> eigenvalues_sym(const Mat3& a);

inline double lambda_min_sym(const Mat3& a) { return eigenvalues_sym(a)[0]; }
inline double lambda_max_sym(const Mat3& a) { return eigenvalues_sym(a)[2]; }

}  // namespace angvel
