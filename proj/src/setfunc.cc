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

#include "obsassign/setfunc.h"

#include <algorithm>
#include <string>

#include "obsassign/error.h"
#include "obsassign/rng.h"

namespace obsassign {

size_t ValueOracle::KeyHash::operator()(const std::vector<int32_t>& key) const noexcept {
  uint64_t h = 1469598103934665603ULL;
  for (int32_t v : key) {
    h ^= static_cast<uint32_t>(v);
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

ValueOracle::ValueOracle(MeasureKind kind, std::vector<Sensor> sensors,
                         std::vector<TargetState> targets)
    : kind_(std::move(kind)),
      sensors_(std::move(sensors)),
      targets_(std::move(targets)),
      cache_(targets_.size()) {
  for (size_t i = 0; i < sensors_.size(); ++i) {
    if (!sensor_index_.emplace(sensors_[i].id, i).second) {
      throw Error(ErrorCode::kValidation,
                  "duplicate sensor id " + std::to_string(sensors_[i].id.value));
    }
  }
}

size_t ValueOracle::TargetIndex(TargetId id) const {
  for (size_t i = 0; i < targets_.size(); ++i) {
    if (targets_[i].id == id) return i;
  }
  throw Error(ErrorCode::kUnknownId, "unknown target id " + std::to_string(id.value));
}

Score ValueOracle::Value(std::span<const SensorId> subset, TargetId target) {
  ++queries_;
  const size_t t = TargetIndex(target);
  std::vector<int32_t> key;
  key.reserve(subset.size());
  for (SensorId id : subset) {
    if (!sensor_index_.contains(id)) {
      throw Error(ErrorCode::kUnknownId, "unknown sensor id " + std::to_string(id.value));
    }
    key.push_back(id.value);
  }
  std::sort(key.begin(), key.end());
  if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
    throw Error(ErrorCode::kValidation, "sensor subset repeats an id");
  }

  auto& cache = cache_[t];
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  ++evaluations_;
  std::vector<Sensor> group;
  group.reserve(key.size());
  for (int32_t id : key) group.push_back(sensors_[sensor_index_.at(SensorId{id})]);
  const Score v = MeasureValue(kind_, group, targets_[t]);
  cache.emplace(std::move(key), v);
  return v;
}

namespace {

// Evaluates one (A, B, r) triple and folds the outcome into the report.
void CheckTriple(ValueOracle& oracle, TargetId target, std::vector<SensorId> a,
                 std::vector<SensorId> b, SensorId r, LatticeReport& report) {
  ++report.samples;
  const Score wa = oracle.Value(a, target);
  const Score wb = oracle.Value(b, target);
  a.push_back(r);
  b.push_back(r);
  const Score war = oracle.Value(a, target);
  const Score wbr = oracle.Value(b, target);

  bool skipped = false;
  bool monotone_bad = false;
  auto check_monotone = [&](Score before, Score after) {
    if (before.is_neg_inf() || after.is_neg_inf()) {
      skipped = true;
      return;
    }
    const double gap = before.value() - after.value();
    if (gap > kLatticeTol) {
      monotone_bad = true;
      report.worst_violation = std::max(report.worst_violation, gap);
    }
  };
  check_monotone(wa, war);
  check_monotone(wb, wbr);
  if (monotone_bad) ++report.monotone_violations;

  if (wa.is_neg_inf() || wb.is_neg_inf() || war.is_neg_inf() || wbr.is_neg_inf()) {
    skipped = true;
  } else {
    const double gain_a = war.value() - wa.value();
    const double gain_b = wbr.value() - wb.value();
    if (gain_b - gain_a > kLatticeTol) {
      ++report.submodular_violations;
      report.worst_violation = std::max(report.worst_violation, gain_b - gain_a);
    }
  }
  if (skipped) ++report.skipped;
}

}  // namespace

LatticeReport CheckLattice(ValueOracle& oracle, TargetId target,
                           uint64_t sample_count, uint64_t seed) {
  LatticeReport report;
  const auto& sensors = oracle.sensors();
  if (sensors.empty()) return report;
  Rng rng(seed);
  for (uint64_t s = 0; s < sample_count; ++s) {
    const size_t r = rng.Below(sensors.size());
    std::vector<SensorId> a;
    std::vector<SensorId> b;
    for (size_t i = 0; i < sensors.size(); ++i) {
      if (i == r) continue;
      // 0: in A (and B), 1: in B only, 2: outside B.
      const uint64_t slot = rng.Below(3);
      if (slot == 0) a.push_back(sensors[i].id);
      if (slot <= 1) b.push_back(sensors[i].id);
    }
    CheckTriple(oracle, target, std::move(a), std::move(b), sensors[r].id, report);
  }
  return report;
}

LatticeReport CheckLatticeExhaustive(ValueOracle& oracle, TargetId target) {
  LatticeReport report;
  const auto& sensors = oracle.sensors();
  const size_t n = sensors.size();
  if (n == 0) return report;
  uint64_t combos = 1;
  for (size_t i = 0; i + 1 < n; ++i) combos *= 3;
  for (size_t r = 0; r < n; ++r) {
    for (uint64_t code = 0; code < combos; ++code) {
      std::vector<SensorId> a;
      std::vector<SensorId> b;
      uint64_t c = code;
      for (size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        const uint64_t slot = c % 3;
        c /= 3;
        if (slot == 0) a.push_back(sensors[i].id);
        if (slot <= 1) b.push_back(sensors[i].id);
      }
      CheckTriple(oracle, target, std::move(a), std::move(b), sensors[r].id, report);
    }
  }
  return report;
}

}  // namespace obsassign
