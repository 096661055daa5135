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
#include "obsassign/setfunc.h"
#include "oracles.h"

namespace obsassign {
namespace {

const double kSqrt3 = std::sqrt(3.0);

MeasureKind Kind(MeasureType type) { return {type, false, std::nullopt}; }

std::vector<TargetState> OneTarget(Vec2 p, double u_max = 1.0) {
  return {{TargetId{1}, p, u_max, std::nullopt}};
}

std::vector<Sensor> Case1Sensors() {
  return {{SensorId{1}, {0.0, 0.0}}, {SensorId{2}, {2 * kSqrt3, -9.0}}, {SensorId{3}, {kSqrt3, 3.0}}};
}

std::vector<Sensor> Case2Sensors() {
  return {{SensorId{1}, {0.0, 0.0}},
          {SensorId{2}, {2 * kSqrt3, 0.0}},
          {SensorId{3}, {kSqrt3, 0.1}},
          {SensorId{4}, {kSqrt3, 3.0}}};
}

std::vector<Sensor> RandomSensors(std::mt19937_64& gen, int n) {
  std::vector<Sensor> s;
  for (int i = 0; i < n; ++i) s.push_back({SensorId{i}, testing::UniformPoint(gen, 0.0, 100.0)});
  return s;
}

TEST_CASE("oracle caches by canonical subset") {
  ValueOracle oracle(Kind(MeasureType::kTrace), Case2Sensors(), OneTarget({kSqrt3, 1.0}));
  const Score first = oracle.Value({SensorId{2}, SensorId{1}}, TargetId{1});
  const Score second = oracle.Value({SensorId{1}, SensorId{2}}, TargetId{1});
  CHECK(first == second);
  CHECK(first.value() == doctest::Approx(8.0));
  CHECK(oracle.queries() == 2);
  CHECK(oracle.evaluations() == 1);
  oracle.ResetCounters();
  CHECK(oracle.queries() == 0);
}

TEST_CASE("oracle rejects bad ids") {
  ValueOracle oracle(Kind(MeasureType::kTrace), Case2Sensors(), OneTarget({kSqrt3, 1.0}));
  auto code = [&](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  CHECK(code([&] { oracle.Value({SensorId{9}}, TargetId{1}); }) == ErrorCode::kUnknownId);
  CHECK(code([&] { oracle.Value({SensorId{1}}, TargetId{7}); }) == ErrorCode::kUnknownId);
  CHECK(code([&] { oracle.Value({SensorId{1}, SensorId{1}}, TargetId{1}); }) ==
        ErrorCode::kValidation);
  std::vector<Sensor> dup = Case2Sensors();
  dup[1].id = SensorId{1};
  CHECK(code([&] { ValueOracle(Kind(MeasureType::kTrace), dup, OneTarget({0.0, 0.0})); }) ==
        ErrorCode::kValidation);
}

TEST_CASE("counterexample values") {
  ValueOracle c1(Kind(MeasureType::kInvCondLowerBound), Case1Sensors(), OneTarget({kSqrt3, 1.0}));
  CHECK(std::abs(c1.Value({SensorId{1}, SensorId{3}}, TargetId{1}).value() - 0.5345) <= 5e-5);
  CHECK(std::abs(c1.Value({SensorId{1}, SensorId{2}, SensorId{3}}, TargetId{1}).value() - 0.1823) <=
        5e-5);

  ValueOracle c2(Kind(MeasureType::kInvCondLowerBound), Case2Sensors(), OneTarget({kSqrt3, 1.0}));
  const TargetId t{1};
  CHECK(std::abs(c2.Value({SensorId{1}, SensorId{2}}, t).value() - 0.5345) <= 5e-5);
  CHECK(std::abs(c2.Value({SensorId{1}, SensorId{2}, SensorId{4}}, t).value() - 0.9258) <= 5e-5);
  CHECK(std::abs(c2.Value({SensorId{1}, SensorId{2}, SensorId{3}, SensorId{4}}, t).value() -
                 0.8765) <= 5e-5);
  // 0.3310 is the value of {s1, s3} in this geometry.
  CHECK(std::abs(c2.Value({SensorId{1}, SensorId{3}}, t).value() - 0.3310) <= 5e-5);
}

TEST_CASE("lattice checks find the counterexamples") {
  ValueOracle c1(Kind(MeasureType::kInvCondLowerBound), Case1Sensors(), OneTarget({kSqrt3, 1.0}));
  CHECK(CheckLatticeExhaustive(c1, TargetId{1}).monotone_violations >= 1);
  ValueOracle c2(Kind(MeasureType::kInvCondLowerBound), Case2Sensors(), OneTarget({kSqrt3, 1.0}));
  const LatticeReport r = CheckLatticeExhaustive(c2, TargetId{1});
  CHECK(r.samples == 27 * 4);
  CHECK(r.submodular_violations >= 1);
  CHECK(r.worst_violation > 0.0);
}

TEST_CASE("trace is modular") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sensors = RandomSensors(gen, 6);
    ValueOracle oracle(Kind(MeasureType::kTrace), sensors,
                       OneTarget(testing::UniformPoint(gen, 0.0, 100.0)));
    std::vector<SensorId> a, b, all;
    for (const Sensor& s : sensors) {
      (gen() % 2 ? a : b).push_back(s.id);
      all.push_back(s.id);
    }
    const double sum = oracle.Value(a, TargetId{1}).value() + oracle.Value(b, TargetId{1}).value();
    CHECK(std::abs(oracle.Value(all, TargetId{1}).value() - sum) <= 1e-12 * std::max(1.0, sum));
    const LatticeReport r = CheckLattice(oracle, TargetId{1}, 200, trial);
    CHECK(r.monotone_violations == 0);
    CHECK(r.submodular_violations == 0);
  }
}

TEST_CASE("rank is monotone and submodular") {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    ValueOracle oracle(Kind(MeasureType::kRank), RandomSensors(gen, 2 + trial % 6),
                       OneTarget(testing::UniformPoint(gen, 0.0, 100.0)));
    const LatticeReport r = CheckLattice(oracle, TargetId{1}, 500, trial);
    CHECK(r.samples == 500);
    CHECK(r.monotone_violations == 0);
    CHECK(r.submodular_violations == 0);
  }
}

TEST_CASE("log det has no violations among non-singular Grams") {
  std::mt19937_64 gen(6);
  uint64_t compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ValueOracle oracle(Kind(MeasureType::kLogDet), RandomSensors(gen, 3 + trial % 4),
                       OneTarget(testing::UniformPoint(gen, 0.0, 100.0)));
    const LatticeReport r = CheckLattice(oracle, TargetId{1}, 500, trial);
    CHECK(r.monotone_violations == 0);
    CHECK(r.submodular_violations == 0);
    compared += r.samples - r.skipped;
  }
  CHECK(compared > 1000);
}

TEST_CASE("lattice sampling is reproducible") {
  std::mt19937_64 gen(7);
  const auto sensors = RandomSensors(gen, 7);
  ValueOracle a(Kind(MeasureType::kInvCondLowerBound), sensors, OneTarget({50.0, 50.0}));
  ValueOracle b(Kind(MeasureType::kInvCondLowerBound), sensors, OneTarget({50.0, 50.0}));
  const LatticeReport ra = CheckLattice(a, TargetId{1}, 300, 42);
  const LatticeReport rb = CheckLattice(b, TargetId{1}, 300, 42);
  CHECK(ra.monotone_violations == rb.monotone_violations);
  CHECK(ra.submodular_violations == rb.submodular_violations);
  CHECK(ra.worst_violation == rb.worst_violation);
}

}  // namespace
}  // namespace obsassign
