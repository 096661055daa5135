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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "obsassign/matkernel.h"
#include "oracles.h"

namespace obsassign {
namespace {

const double kSqrt3 = std::sqrt(3.0);

TEST_CASE("EigSym2 closed form") {
  SUBCASE("two-sensor gram") {
    const Eigen2 e = EigSym2({3.0, kSqrt3, 5.0});
    CHECK(e.lambda_min == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(e.lambda_max == doctest::Approx(6.0).epsilon(1e-14));
  }
  SUBCASE("identity") {
    const Eigen2 e = EigSym2(Sym2::Identity());
    CHECK(e.lambda_min == 1.0);
    CHECK(e.lambda_max == 1.0);
  }
  SUBCASE("off-diagonal heavy") {
    // Frozen from a 40-digit characteristic-polynomial solve.
    const Eigen2 e = EigSym2({6.0, -9.0 * kSqrt3, 105.0});
    CHECK(e.lambda_min == doctest::Approx(3.603468323981418).epsilon(1e-13));
    CHECK(e.lambda_max == doctest::Approx(107.39653167601858).epsilon(1e-14));
  }
  SUBCASE("tiny negative from rounding clamps to zero") {
    const Eigen2 e = EigSym2({1.0, 1.0, 1.0 - 1e-17});
    CHECK(e.lambda_min == 0.0);
  }
}

TEST_CASE("EigSym2 roots satisfy the characteristic polynomial") {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Vec2> rows;
    const int n = 1 + trial % 5;
    for (int i = 0; i < n; ++i) rows.push_back(testing::UniformPoint(gen, -100.0, 100.0));
    const Sym2 g = Gram(rows);
    const Eigen2 e = EigSym2(g);
    CHECK(e.lambda_min <= e.lambda_max);
    const auto [lo, hi] = testing::QuadraticRoots(g.trace(), static_cast<long double>(g.a11) * g.a22 -
                                                                 static_cast<long double>(g.a12) * g.a12);
    const double scale = std::max(std::abs(e.lambda_max), 1.0);
    for (double lambda : {e.lambda_min, e.lambda_max}) {
      const double residual = lambda * lambda - g.trace() * lambda + g.det();
      CHECK(std::abs(residual) <= 1e-10 * scale * scale);
    }
    CHECK(std::abs(e.lambda_max - static_cast<double>(hi)) <= 1e-12 * scale);
    CHECK(std::abs(e.lambda_min - static_cast<double>(lo)) <= 1e-9 * scale);
  }
}

TEST_CASE("Gram") {
  const Sym2 g = Gram(std::vector<Vec2>{{kSqrt3, 1.0}, {0.0, -2.0}});
  CHECK(g.a11 == doctest::Approx(3.0));
  CHECK(g.a12 == doctest::Approx(kSqrt3));
  CHECK(g.a22 == doctest::Approx(5.0));
  CHECK(Gram(std::vector<Vec2>{{1.0, 0.0}}) == Sym2{1.0, 0.0, 0.0});
  CHECK(Gram(std::vector<Vec2>{{1.0, 0.0}, {0.0, 1.0}}) == Sym2{1.0, 0.0, 1.0});
}

TEST_CASE("Gram trace is the sum of squared row norms") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vec2> rows;
    double expected = 0.0;
    for (int i = 0; i < 1 + trial % 7; ++i) {
      rows.push_back(testing::UniformPoint(gen, -50.0, 50.0));
      expected += rows.back().x * rows.back().x + rows.back().y * rows.back().y;
    }
    CHECK(Gram(rows).trace() == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("SingularValues") {
  Singular2 s = SingularValues(std::vector<Vec2>{{kSqrt3, 1.0}, {0.0, -2.0}});
  CHECK(s.sigma_min == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(s.sigma_max == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  s = SingularValues(std::vector<Vec2>{{1.0, 0.0}, {0.0, 1.0}});
  CHECK(s.sigma_min == 1.0);
  CHECK(s.sigma_max == 1.0);
  s = SingularValues(std::vector<Vec2>{{2.0, 0.0}});
  CHECK(s.sigma_min == 0.0);
  CHECK(s.sigma_max == 2.0);
}

TEST_CASE("SingularValues agree with power iteration") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vec2> rows;
    for (int i = 0; i < 2 + trial % 5; ++i) rows.push_back(testing::UniformPoint(gen, -100.0, 100.0));
    const Singular2 s = SingularValues(rows);
    const auto [lo, hi] = testing::PowerIterationSingularValues(rows);
    CHECK(s.sigma_max == doctest::Approx(hi).epsilon(1e-8));
    CHECK(s.sigma_min == doctest::Approx(lo).epsilon(1e-8));
  }
}

TEST_CASE("adding a row never decreases Gram eigenvalues") {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Vec2> rows;
    for (int i = 0; i < 1 + trial % 4; ++i) rows.push_back(testing::UniformPoint(gen, -10.0, 10.0));
    const Eigen2 before = EigSym2(Gram(rows));
    rows.push_back(testing::UniformPoint(gen, -10.0, 10.0));
    const Eigen2 after = EigSym2(Gram(rows));
    const double tol = 1e-12 * std::max(1.0, after.lambda_max);
    CHECK(after.lambda_min >= before.lambda_min - tol);
    CHECK(after.lambda_max >= before.lambda_max - tol);
  }
}

TEST_CASE("NumericalRank") {
  CHECK(NumericalRank(Sym2{1.0, 0.0, 1.0}, 1e-9) == 2);
  CHECK(NumericalRank(Sym2{1.0, 0.0, 0.0}, 1e-9) == 1);
  CHECK(NumericalRank(Sym2{0.0, 0.0, 0.0}, 1e-9) == 0);
  // Single-sensor Gram at meter scale stays rank one.
  CHECK(NumericalRank(Outer({37.3, -81.9}), 1e-9) == 1);
  CHECK(NumericalRank(Outer({1e-4, 3e-4}), 1e-9) == 1);
}

TEST_CASE("MajorEigenvector") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 a = testing::UniformPoint(gen, -5.0, 5.0);
    const Vec2 b = testing::UniformPoint(gen, -5.0, 5.0);
    const Sym2 m = Outer(a) + Outer(b);
    const Vec2 v = MajorEigenvector(m);
    const double lmax = EigSym2(m).lambda_max;
    CHECK(Norm(v) == doctest::Approx(1.0));
    CHECK(m.a11 * v.x + m.a12 * v.y == doctest::Approx(lmax * v.x).epsilon(1e-9).scale(lmax));
    CHECK(m.a12 * v.x + m.a22 * v.y == doctest::Approx(lmax * v.y).epsilon(1e-9).scale(lmax));
  }
}

}  // namespace
}  // namespace obsassign
