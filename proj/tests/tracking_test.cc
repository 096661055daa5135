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

#include "obsassign/error.h"
#include "obsassign/tracking.h"
#include "oracles.h"

namespace obsassign {
namespace {

// Smallest eigenvalue of a - b (a - b PSD means b <= a in the Loewner order).
double MinEigDiff(const Sym2& a, const Sym2& b) {
  return EigSym2({a.a11 - b.a11, a.a12 - b.a12, a.a22 - b.a22}).lambda_min;
}

std::vector<Measurement> Exact(const std::vector<Sensor>& sensors, Vec2 truth, double var) {
  std::vector<Measurement> z;
  for (const Sensor& s : sensors) z.push_back({s.id, HalfSquaredRange(s.position, truth), var});
  return z;
}

TEST_CASE("EkfPredict") {
  const TrackState still = EkfPredict({{0.0, 0.0}, Sym2::Identity()}, 0.0, 1.0);
  CHECK(still == TrackState{{0.0, 0.0}, Sym2::Identity()});
  const TrackState grown = EkfPredict({{1.0, 2.0}, Sym2::Identity()}, 1.0, 1.0);
  CHECK(grown.mean == Vec2{1.0, 2.0});
  CHECK(grown.covariance == Sym2::Identity(2.0));
  CHECK(EkfPredict({{0.0, 0.0}, Sym2::Identity()}, 0.5, 2.0).covariance == Sym2::Identity(2.0));
  CHECK(CovTrace(EkfPredict(grown, 1e-3, 0.1)) > CovTrace(grown));
  CHECK_THROWS_AS(EkfPredict(grown, 1.0, 0.0), Error);
}

TEST_CASE("MeanError and CovTrace") {
  CHECK(MeanError({{1.0, 1.0}, Sym2::Identity()}, {1.0, 1.0}) == 0.0);
  CHECK(MeanError({{0.0, 0.0}, Sym2::Identity()}, {3.0, 4.0}) == 5.0);
  CHECK(CovTrace({{0.0, 0.0}, Sym2::Identity()}) == 2.0);
  CHECK(CovTrace({{0.0, 0.0}, Sym2{}}) == 0.0);
  CHECK(CovTrace({{0.0, 0.0}, Sym2{1.0, 0.0, 3.0}}) == 4.0);
}

TEST_CASE("EkfUpdate basics") {
  const std::vector<Sensor> sensors{{SensorId{0}, {0.0, 0.0}}, {SensorId{1}, {10.0, 0.0}}};
  const TrackState prior{{4.0, 3.0}, Sym2::Identity()};
  CHECK(EkfUpdate(prior, {}, sensors) == prior);
  const std::vector<Measurement> bad{{SensorId{7}, 1.0, 1.0}};
  try {
    EkfUpdate(prior, bad, sensors);
    FAIL("expected UnknownSensor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownSensor);
  }
  const TrackState post = EkfUpdate(prior, Exact(sensors, {4.0, 3.0}, 1.0), sensors);
  CHECK(post.mean == prior.mean);  // zero innovation
  CHECK(CovTrace(post) < CovTrace(prior));
}

TEST_CASE("exact measurements usually improve the estimate") {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> noise(0.0, 0.3);
  int closer = 0;
  const int trials = 1000;
  for (int trial = 0; trial < trials; ++trial) {
    const Vec2 truth = testing::UniformPoint(gen, 20.0, 80.0);
    // Two sensors about 20 m away along roughly orthogonal bearings.
    const double a = std::uniform_real_distribution<double>(0.0, 2 * M_PI)(gen);
    const std::vector<Sensor> sensors{
        {SensorId{0}, truth + 20.0 * Vec2{std::cos(a), std::sin(a)}},
        {SensorId{1}, truth + 20.0 * Vec2{-std::sin(a), std::cos(a)}}};
    const TrackState prior{truth + Vec2{noise(gen), noise(gen)}, Sym2::Identity(0.09)};
    const TrackState post = EkfUpdate(prior, Exact(sensors, truth, 1e-6), sensors);
    if (MeanError(post, truth) < MeanError(prior, truth)) ++closer;
  }
  CHECK(closer >= 0.95 * trials);
}

TEST_CASE("a single sensor leaves the tangent direction unconstrained") {
  const std::vector<Sensor> sensors{{SensorId{0}, {0.0, 0.0}}};
  const Vec2 truth{10.0, 0.5};
  const TrackState prior{truth, Sym2::Identity()};
  const TrackState post = EkfUpdate(prior, Exact(sensors, truth, 1e-4), sensors);
  const Vec2 radial = (1.0 / Norm(truth)) * truth;
  const Vec2 tangent{-radial.y, radial.x};
  const Sym2& p = post.covariance;
  const double tangent_var = tangent.x * (p.a11 * tangent.x + p.a12 * tangent.y) +
                             tangent.y * (p.a12 * tangent.x + p.a22 * tangent.y);
  const double radial_var = radial.x * (p.a11 * radial.x + p.a12 * radial.y) +
                            radial.y * (p.a12 * radial.x + p.a22 * radial.y);
  CHECK(tangent_var > 0.99);
  CHECK(radial_var < 0.01);
}

TEST_CASE("duplicated measurements never add uncertainty") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 500; ++trial) {
    const Vec2 truth = testing::UniformPoint(gen, 0.0, 100.0);
    const std::vector<Sensor> sensors{{SensorId{0}, testing::UniformPoint(gen, 0.0, 100.0)},
                                      {SensorId{1}, testing::UniformPoint(gen, 0.0, 100.0)}};
    const TrackState prior{truth + testing::UniformPoint(gen, -1.0, 1.0), Sym2{2.0, 0.3, 1.0}};
    const auto z = Exact(sensors, truth, 0.5);
    const std::vector<Measurement> once{z[0]};
    const std::vector<Measurement> twice{z[0], z[0]};
    const TrackState p1 = EkfUpdate(prior, once, sensors);
    const TrackState p2 = EkfUpdate(prior, twice, sensors);
    const double scale = std::max(1.0, CovTrace(prior));
    CHECK(MinEigDiff(prior.covariance, p1.covariance) >= -1e-10 * scale);
    CHECK(MinEigDiff(p1.covariance, p2.covariance) >= -1e-10 * scale);
  }
}

TEST_CASE("covariance stays PSD and noise-free updates converge") {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec2 truth = testing::UniformPoint(gen, 30.0, 70.0);
    const std::vector<Sensor> sensors{{SensorId{0}, testing::UniformPoint(gen, 0.0, 100.0)},
                                      {SensorId{1}, testing::UniformPoint(gen, 0.0, 100.0)},
                                      {SensorId{2}, testing::UniformPoint(gen, 0.0, 100.0)}};
    TrackState state{truth + testing::UniformPoint(gen, -1.0, 1.0), Sym2::Identity(4.0)};
    for (int k = 0; k < 60; ++k) {
      state = EkfPredict(state, 0.01, 1.0);
      state = EkfUpdate(state, Exact(sensors, truth, 1e-6), sensors);
      CHECK(EigSym2(state.covariance).lambda_min >= -1e-10);
    }
    CHECK(MeanError(state, truth) < 1e-3);
  }
}

TEST_CASE("ClampPsd") {
  const Sym2 m = ClampPsd({1.0, 2.0, 1.0});  // eigenvalues 3 and -1
  const Eigen2 e = EigSym2(m);
  CHECK(e.lambda_min == doctest::Approx(0.0).scale(1.0));
  CHECK(e.lambda_max == doctest::Approx(3.0));
  CHECK(ClampPsd(Sym2{2.0, 0.5, 1.0}) == Sym2{2.0, 0.5, 1.0});
}

}  // namespace
}  // namespace obsassign
