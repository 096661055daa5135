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

#include "obsassign/matkernel.h"

#include <algorithm>
#include <cmath>

namespace obsassign {

double Dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

double Norm(Vec2 v) { return std::hypot(v.x, v.y); }

bool IsFinite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

Eigen2 EigSym2(const Sym2& m) {
  // lambda = mean +- radius, with the radius computed from the half
  // difference of the diagonal so it never suffers cancellation.
  const double mean = 0.5 * (m.a11 + m.a22);
  const double half_diff = 0.5 * (m.a11 - m.a22);
  const double radius = std::hypot(half_diff, m.a12);
  const double lambda_max = mean + radius;
  // Vieta: lambda_min * lambda_max = det. Prefer the product form when the
  // direct difference would cancel catastrophically.
  double lambda_min = mean - radius;
  if (lambda_max != 0.0 && std::abs(lambda_min) < 0.5 * std::abs(lambda_max)) {
    lambda_min = m.det() / lambda_max;
  }
  const double tr = std::abs(m.a11 + m.a22);
  if (lambda_min < 0.0 && lambda_min >= -kClampTol * tr) lambda_min = 0.0;
  return {lambda_min, lambda_max};
}

Vec2 MajorEigenvector(const Sym2& m) {
  const double half_diff = 0.5 * (m.a11 - m.a22);
  if (m.a12 == 0.0) {
    return half_diff >= 0.0 ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  }
  const double radius = std::hypot(half_diff, m.a12);
  Vec2 v{half_diff + radius, m.a12};
  if (half_diff < 0.0) v = {m.a12, radius - half_diff};
  const double n = Norm(v);
  return {v.x / n, v.y / n};
}

Sym2 Outer(Vec2 v) { return {v.x * v.x, v.x * v.y, v.y * v.y}; }

Sym2 Gram(std::span<const Vec2> rows) {
  Sym2 g;
  for (const Vec2& r : rows) g = g + Outer(r);
  return g;
}

Singular2 SingularValues(std::span<const Vec2> rows) {
  const Eigen2 e = EigSym2(Gram(rows));
  return {std::sqrt(std::max(e.lambda_min, 0.0)),
          std::sqrt(std::max(e.lambda_max, 0.0))};
}

int NumericalRank(const Sym2& m, double rel_tol) {
  const Eigen2 e = EigSym2(m);
  const double threshold = rel_tol * std::max(e.lambda_max, kAbsFloor);
  return (e.lambda_min > threshold ? 1 : 0) + (e.lambda_max > threshold ? 1 : 0);
}

}  // namespace obsassign
