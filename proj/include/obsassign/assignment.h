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

// Sensor-to-target assignment solvers.
//
//   GreedyGeneral     sets of any size per target, each sensor used at most
//                     once; 1/2-approximate for monotone submodular measures.
//   GreedyPairs       exactly two sensors per target, disjoint across
//                     targets; 1/3-approximate for any nonnegative measure.
//   BruteForcePairs   exact optimum of the pair problem by enumeration.
//   RelaxedPairs      upper bound on the pair optimum: distinct pairs per
//                     target, but pairs may share sensors. Solved exactly as
//                     a maximum-weight bipartite matching.
//
// All solvers run over every sensor and target held by the oracle and break
// ties lexicographically on IDs, so results are reproducible.

#ifndef OBSASSIGN_ASSIGNMENT_H_
#define OBSASSIGN_ASSIGNMENT_H_

#include <cstdint>
#include <vector>

#include "obsassign/observability.h"
#include "obsassign/setfunc.h"

namespace obsassign {

struct TargetGroup {
  TargetId target;
  std::vector<SensorId> sensors;  // ascending
  Score value;
};

struct Assignment {
  // One entry per target, in ascending TargetId order.
  std::vector<TargetGroup> groups;
  Score objective;

  // True when some group scored the log-det sentinel.
  bool neg_inf_contaminated() const { return objective.is_neg_inf(); }
  const TargetGroup* Find(TargetId target) const;
  std::vector<SensorId> Unassigned(const std::vector<Sensor>& sensors) const;
  // Every sensor appears in at most one group.
  bool IsPartition() const;
};

struct PairTriple {
  SensorId sensor_a;
  SensorId sensor_b;  // sensor_a < sensor_b
  TargetId target;
  Score value;
};

struct RelaxedMatching {
  Score upper_bound;
  std::vector<PairTriple> matching;  // ascending TargetId
};

inline constexpr uint64_t kDefaultBruteForceCap = 100'000'000;

// Throws kEmptyTargets when the oracle has no targets.
Assignment GreedyGeneral(ValueOracle& oracle);

// Throws kInsufficientSensors when N < 2L.
Assignment GreedyPairs(ValueOracle& oracle);

// prod_{l=0}^{L-1} C(N - 2l, 2), saturating at UINT64_MAX; 0 when N < 2L.
uint64_t PairAssignmentCount(uint64_t n_sensors, uint64_t n_targets);

// Throws kInsufficientSensors when N < 2L and kInstanceTooLarge when the
// enumeration would exceed `cap` assignments. `enumerated`, when given,
// receives the number of complete assignments visited.
Assignment BruteForcePairs(ValueOracle& oracle, uint64_t cap = kDefaultBruteForceCap,
                           uint64_t* enumerated = nullptr);

// Throws kInsufficientSensors when there are fewer than L distinct pairs.
RelaxedMatching RelaxedPairs(ValueOracle& oracle);

// Re-evaluates every group against the oracle and returns the summed score.
Score RecomputeObjective(ValueOracle& oracle, const Assignment& assignment);

}  // namespace obsassign

#endif  // OBSASSIGN_ASSIGNMENT_H_
