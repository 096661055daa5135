// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form numerics for 2x2 symmetric matrices and tall N x 2 matrices.
//
// Every observability quantity in this library reduces to the 2x2 Gram
// matrix M^T M of a tall two-column matrix M, so no general eigensolver is
// needed: eigenvalues come from the characteristic polynomial and singular
// values are their square roots.

#ifndef OBSASSIGN_MATKERNEL_H_
#define OBSASSIGN_MATKERNEL_H_

#include <span>
#include <vector>

namespace obsassign {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
};

double Dot(Vec2 a, Vec2 b);
double Norm(Vec2 v);
bool IsFinite(Vec2 v);

// Symmetric 2x2 matrix [a11 a12; a12 a22].
struct Sym2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  friend bool operator==(const Sym2&, const Sym2&) = default;
  friend Sym2 operator+(Sym2 a, Sym2 b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a22 + b.a22};
  }

  static Sym2 Identity(double scale = 1.0) { return {scale, 0.0, scale}; }

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a12; }
};

// Rows of an N x 2 matrix.
using TallMatrix = std::vector<Vec2>;

struct Eigen2 {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

struct Singular2 {
  double sigma_min = 0.0;
  double sigma_max = 0.0;
};

// Eigenvalues of m in ascending order. A slightly negative lambda_min in
// [-1e-12 * |tr|, 0) is clamped to zero, since every Gram matrix is PSD.
Eigen2 EigSym2(const Sym2& m);

// Unit eigenvector for lambda_max (the minor one is its perpendicular).
Vec2 MajorEigenvector(const Sym2& m);

// Sum of outer products r^T r over the rows.
Sym2 Gram(std::span<const Vec2> rows);

// Outer product v v^T.
Sym2 Outer(Vec2 v);

Singular2 SingularValues(std::span<const Vec2> rows);

// Number of eigenvalues strictly above rel_tol * max(lambda_max, 1e-12).
int NumericalRank(const Sym2& m, double rel_tol = 1e-9);

inline constexpr double kAbsFloor = 1e-12;
inline constexpr double kClampTol = 1e-12;

}  // namespace obsassign

#endif  // OBSASSIGN_MATKERNEL_H_
