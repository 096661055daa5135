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

#include "obsassign/assignment.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "obsassign/error.h"
#include "obsassign/hungarian.h"

namespace obsassign {

namespace {

std::vector<SensorId> SortedSensorIds(const ValueOracle& oracle) {
  std::vector<SensorId> ids;
  for (const Sensor& s : oracle.sensors()) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<TargetId> SortedTargetIds(const ValueOracle& oracle) {
  std::vector<TargetId> ids;
  for (const TargetState& t : oracle.targets()) ids.push_back(t.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

// omega(after) - omega(before), with the sentinel treated as -infinity.
double Gain(Score before, Score after) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (before.is_neg_inf() && after.is_neg_inf()) return 0.0;
  if (before.is_neg_inf()) return kInf;
  if (after.is_neg_inf()) return -kInf;
  return after.value() - before.value();
}

void RequirePairs(size_t n_sensors, size_t n_targets) {
  if (n_sensors < 2 * n_targets) {
    throw Error(ErrorCode::kInsufficientSensors,
                "pair assignment needs N >= 2L (N=" + std::to_string(n_sensors) +
                    ", L=" + std::to_string(n_targets) + ")");
  }
}

}  // namespace

const TargetGroup* Assignment::Find(TargetId target) const {
  for (const TargetGroup& g : groups) {
    if (g.target == target) return &g;
  }
  return nullptr;
}

std::vector<SensorId> Assignment::Unassigned(const std::vector<Sensor>& sensors) const {
  std::set<SensorId> used;
  for (const TargetGroup& g : groups) used.insert(g.sensors.begin(), g.sensors.end());
  std::vector<SensorId> out;
  for (const Sensor& s : sensors) {
    if (!used.contains(s.id)) out.push_back(s.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Assignment::IsPartition() const {
  std::set<SensorId> used;
  for (const TargetGroup& g : groups) {
    for (SensorId s : g.sensors) {
      if (!used.insert(s).second) return false;
    }
  }
  return true;
}

Score RecomputeObjective(ValueOracle& oracle, const Assignment& assignment) {
  Score total(0.0);
  for (const TargetGroup& g : assignment.groups) total += oracle.Value(g.sensors, g.target);
  return total;
}

Assignment GreedyGeneral(ValueOracle& oracle) {
  const std::vector<TargetId> targets = SortedTargetIds(oracle);
  if (targets.empty()) throw Error(ErrorCode::kEmptyTargets, "no targets to assign to");

  Assignment result;
  for (TargetId t : targets) result.groups.push_back({t, {}, Score(0.0)});

  for (SensorId s : SortedSensorIds(oracle)) {
    double best_gain = -std::numeric_limits<double>::infinity();
    size_t best = targets.size();
    Score best_value;
    for (size_t k = 0; k < targets.size(); ++k) {
      TargetGroup& g = result.groups[k];
      std::vector<SensorId> grown = g.sensors;
      grown.push_back(s);
      const Score after = oracle.Value(grown, g.target);
      const double gain = Gain(g.value, after);
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
        best_value = after;
      }
    }
    // Unassigned when no target benefits; only non-monotone measures do this.
    if (best == targets.size() || best_gain < 0.0) continue;
    TargetGroup& g = result.groups[best];
    g.sensors.push_back(s);
    g.value = best_value;
  }

  result.objective = Score(0.0);
  for (const TargetGroup& g : result.groups) result.objective += g.value;
  return result;
}

Assignment GreedyPairs(ValueOracle& oracle) {
  std::vector<SensorId> sensors = SortedSensorIds(oracle);
  std::vector<TargetId> targets = SortedTargetIds(oracle);
  RequirePairs(sensors.size(), targets.size());

  Assignment result;
  while (!targets.empty()) {
    bool found = false;
    PairTriple best{};
    size_t bi = 0, bj = 0, bl = 0;
    for (size_t i = 0; i < sensors.size(); ++i) {
      for (size_t j = i + 1; j < sensors.size(); ++j) {
        for (size_t l = 0; l < targets.size(); ++l) {
          const Score v = oracle.Value({sensors[i], sensors[j]}, targets[l]);
          if (!found || v > best.value) {
            found = true;
            best = {sensors[i], sensors[j], targets[l], v};
            bi = i;
            bj = j;
            bl = l;
          }
        }
      }
    }
    result.groups.push_back({best.target, {best.sensor_a, best.sensor_b}, best.value});
    sensors.erase(sensors.begin() + static_cast<std::ptrdiff_t>(bj));
    sensors.erase(sensors.begin() + static_cast<std::ptrdiff_t>(bi));
    targets.erase(targets.begin() + static_cast<std::ptrdiff_t>(bl));
  }

  std::sort(result.groups.begin(), result.groups.end(),
            [](const TargetGroup& a, const TargetGroup& b) { return a.target < b.target; });
  result.objective = Score(0.0);
  for (const TargetGroup& g : result.groups) result.objective += g.value;
  return result;
}

uint64_t PairAssignmentCount(uint64_t n_sensors, uint64_t n_targets) {
  if (n_sensors < 2 * n_targets) return 0;
  uint64_t total = 1;
  for (uint64_t l = 0; l < n_targets; ++l) {
    const uint64_t n = n_sensors - 2 * l;
    const uint64_t pairs = n * (n - 1) / 2;
    if (pairs != 0 && total > UINT64_MAX / pairs) return UINT64_MAX;
    total *= pairs;
  }
  return total;
}

namespace {

class PairEnumerator {
 public:
  PairEnumerator(ValueOracle& oracle, std::vector<SensorId> sensors,
                 std::vector<TargetId> targets)
      : oracle_(oracle),
        sensors_(std::move(sensors)),
        targets_(std::move(targets)),
        used_(sensors_.size(), false),
        current_(targets_.size()) {}

  void Run() { Recurse(0, Score(0.0)); }

  uint64_t visited() const { return visited_; }
  const std::vector<PairTriple>& best() const { return best_; }
  Score best_score() const { return best_score_; }

 private:
  void Recurse(size_t depth, Score acc) {
    if (depth == targets_.size()) {
      ++visited_;
      if (best_.empty() || acc > best_score_) {
        best_ = current_;
        best_score_ = acc;
      }
      return;
    }
    const TargetId t = targets_[depth];
    for (size_t i = 0; i < sensors_.size(); ++i) {
      if (used_[i]) continue;
      used_[i] = true;
      for (size_t j = i + 1; j < sensors_.size(); ++j) {
        if (used_[j]) continue;
        used_[j] = true;
        const Score v = oracle_.Value({sensors_[i], sensors_[j]}, t);
        current_[depth] = {sensors_[i], sensors_[j], t, v};
        Recurse(depth + 1, acc + v);
        used_[j] = false;
      }
      used_[i] = false;
    }
  }

  ValueOracle& oracle_;
  std::vector<SensorId> sensors_;
  std::vector<TargetId> targets_;
  std::vector<bool> used_;
  std::vector<PairTriple> current_;
  std::vector<PairTriple> best_;
  Score best_score_;
  uint64_t visited_ = 0;
};

}  // namespace

Assignment BruteForcePairs(ValueOracle& oracle, uint64_t cap, uint64_t* enumerated) {
  std::vector<SensorId> sensors = SortedSensorIds(oracle);
  std::vector<TargetId> targets = SortedTargetIds(oracle);
  RequirePairs(sensors.size(), targets.size());
  const uint64_t count = PairAssignmentCount(sensors.size(), targets.size());
  if (count > cap) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(count) + " pair assignments exceed the cap of " +
                    std::to_string(cap));
  }

  PairEnumerator enumerator(oracle, std::move(sensors), std::move(targets));
  enumerator.Run();
  if (enumerated != nullptr) *enumerated = enumerator.visited();

  Assignment result;
  for (const PairTriple& p : enumerator.best()) {
    result.groups.push_back({p.target, {p.sensor_a, p.sensor_b}, p.value});
  }
  result.objective = Score(0.0);
  for (const TargetGroup& g : result.groups) result.objective += g.value;
  return result;
}

RelaxedMatching RelaxedPairs(ValueOracle& oracle) {
  const std::vector<SensorId> sensors = SortedSensorIds(oracle);
  const std::vector<TargetId> targets = SortedTargetIds(oracle);
  const size_t n_pairs = sensors.size() * (sensors.size() - (sensors.empty() ? 0 : 1)) / 2;
  if (sensors.size() < 2 || n_pairs < targets.size()) {
    throw Error(ErrorCode::kInsufficientSensors,
                "relaxed pair assignment needs C(N,2) >= L");
  }

  std::vector<std::pair<SensorId, SensorId>> pairs;
  pairs.reserve(n_pairs);
  for (size_t i = 0; i < sensors.size(); ++i) {
    for (size_t j = i + 1; j < sensors.size(); ++j) pairs.emplace_back(sensors[i], sensors[j]);
  }

  std::vector<std::vector<Score>> weight(targets.size(), std::vector<Score>(pairs.size()));
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (size_t l = 0; l < targets.size(); ++l) {
    for (size_t p = 0; p < pairs.size(); ++p) {
      const Score w = oracle.Value({pairs[p].first, pairs[p].second}, targets[l]);
      weight[l][p] = w;
      if (!w.is_neg_inf()) {
        lo = std::min(lo, w.value());
        hi = std::max(hi, w.value());
      }
    }
  }
  if (lo > hi) lo = hi = 0.0;

  // Maximize weight = minimize (hi - w). A sentinel edge costs more than any
  // complete matching of finite edges, so the fewest sentinels win first.
  const double sentinel_cost = (hi - lo + 1.0) * static_cast<double>(targets.size() + 1);
  std::vector<std::vector<double>> cost(targets.size(), std::vector<double>(pairs.size()));
  for (size_t l = 0; l < targets.size(); ++l) {
    for (size_t p = 0; p < pairs.size(); ++p) {
      const Score w = weight[l][p];
      cost[l][p] = w.is_neg_inf() ? sentinel_cost : hi - w.value();
    }
  }

  const std::vector<int> match = SolveMinCostAssignment(cost);
  RelaxedMatching result;
  result.upper_bound = Score(0.0);
  for (size_t l = 0; l < targets.size(); ++l) {
    const auto& pair = pairs[static_cast<size_t>(match[l])];
    const Score w = weight[l][static_cast<size_t>(match[l])];
    result.matching.push_back({pair.first, pair.second, targets[l], w});
    result.upper_bound += w;
  }
  return result;
}

}  // namespace obsassign
