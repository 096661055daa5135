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

#ifndef OBSASSIGN_SETFUNC_H_
#define OBSASSIGN_SETFUNC_H_

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "obsassign/observability.h"

namespace obsassign {

// Set function omega(subset, target) over a fixed sensor/target geometry.
//
// Results are cached per target keyed by the sorted subset, so repeated
// queries are cheap and always return the identical value. Not thread-safe.
class ValueOracle {
 public:
  ValueOracle(MeasureKind kind, std::vector<Sensor> sensors,
              std::vector<TargetState> targets);

  // Throws kUnknownId for IDs absent from the geometry and kValidation for
  // repeated sensor IDs.
  Score Value(std::span<const SensorId> subset, TargetId target);
  Score Value(std::initializer_list<SensorId> subset, TargetId target) {
    return Value(std::span<const SensorId>(subset.begin(), subset.size()), target);
  }

  const MeasureKind& kind() const { return kind_; }
  const std::vector<Sensor>& sensors() const { return sensors_; }
  const std::vector<TargetState>& targets() const { return targets_; }

  // Number of Value calls, and how many of them missed the cache.
  uint64_t queries() const { return queries_; }
  uint64_t evaluations() const { return evaluations_; }
  void ResetCounters() { queries_ = evaluations_ = 0; }

 private:
  struct KeyHash {
    size_t operator()(const std::vector<int32_t>& key) const noexcept;
  };

  size_t TargetIndex(TargetId id) const;

  MeasureKind kind_;
  std::vector<Sensor> sensors_;
  std::vector<TargetState> targets_;
  std::unordered_map<SensorId, size_t> sensor_index_;
  std::vector<std::unordered_map<std::vector<int32_t>, Score, KeyHash>> cache_;
  uint64_t queries_ = 0;
  uint64_t evaluations_ = 0;
};

struct LatticeReport {
  uint64_t samples = 0;
  uint64_t monotone_violations = 0;
  uint64_t submodular_violations = 0;
  // Largest amount by which either inequality failed (0 if none did).
  double worst_violation = 0.0;
  // Comparisons dropped because a value was the log-det sentinel.
  uint64_t skipped = 0;
};

inline constexpr double kLatticeTol = 1e-9;

// Draws `sample_count` random triples (A, B, r) with A subset of B and r
// outside B, and counts failures of
//   monotonicity:    omega(A + r) >= omega(A)
//   submodularity:   omega(A + r) - omega(A) >= omega(B + r) - omega(B)
// up to kLatticeTol. Deterministic in `seed`.
LatticeReport CheckLattice(ValueOracle& oracle, TargetId target,
                           uint64_t sample_count, uint64_t seed);

// Same checks over every (A, B, r); 3^(N-1) * N triples, so small N only.
LatticeReport CheckLatticeExhaustive(ValueOracle& oracle, TargetId target);

}  // namespace obsassign

#endif  // OBSASSIGN_SETFUNC_H_
