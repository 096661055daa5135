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

// Scenarios, the closed-loop tracking simulation, and the batch experiments.
//
// One simulation step:
//   1. build a value oracle from the current estimated target positions,
//   2. solve the assignment,
//   3. move every target one step (control clipped to u_max),
//   4. each assigned sensor measures the half squared range to its target's
//      true position, with Gaussian noise,
//   5. run EKF predict and update per target, and log the step.

#ifndef OBSASSIGN_SIM_H_
#define OBSASSIGN_SIM_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "obsassign/assignment.h"
#include "obsassign/observability.h"
#include "obsassign/tracking.h"

namespace obsassign {

struct Bounds {
  Vec2 min{0.0, 0.0};
  Vec2 max{100.0, 100.0};

  bool Contains(Vec2 p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

struct StationaryMotion {
  friend bool operator==(const StationaryMotion&, const StationaryMotion&) = default;
};

// Follows center + radius * (cos, sin)(phase0 + angular_rate * t), where
// phase0 is the bearing of the initial position from the center.
struct CircleMotion {
  Vec2 center;
  double radius = 1.0;
  double angular_rate = 0.1;  // rad/s

  friend bool operator==(const CircleMotion&, const CircleMotion&) = default;
};

// Heads for each point in turn at full speed.
struct WaypointMotion {
  std::vector<Vec2> points;
  bool loop = true;

  friend bool operator==(const WaypointMotion&, const WaypointMotion&) = default;
};

using Motion = std::variant<StationaryMotion, CircleMotion, WaypointMotion>;

struct TargetSpec {
  TargetId id;
  Vec2 initial_position;
  double u_max = 1.0;  // m/s
  Motion motion;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

struct NoiseParams {
  double measurement_var = 1.0;    // m^4, half-squared-range units
  double initial_cov_scale = 4.0;  // initial covariance = scale * I
  double initial_mean_var = 2.0;   // initial estimate = truth + N(0, var * I)

  friend bool operator==(const NoiseParams&, const NoiseParams&) = default;
};

struct Scenario {
  std::vector<Sensor> sensors;
  std::vector<TargetSpec> targets;
  Bounds bounds;
  int horizon = 100;
  double dt = 1.0;
  NoiseParams noise;
  uint64_t seed = 0;

  // Throws kValidation with the offending field in the message.
  void Validate() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

enum class SolverKind { kGreedyGeneral, kGreedyPairs };

std::string_view SolverName(SolverKind solver);
std::optional<SolverKind> ParseSolverName(std::string_view name);

// Throws kInsufficientSensors (pairs with N < 2L), kEmptyTargets, or
// kValidation for measures that cannot run in closed loop.
void ValidateRunSetup(const Scenario& scenario, SolverKind solver, const MeasureKind& measure);

struct StepRecord {
  int step = 0;  // 1-based
  TargetId target;
  Vec2 truth;
  TrackState estimate;
  std::vector<SensorId> assigned;
  Score measure_value;
};

struct RunLog {
  std::vector<Vec2> initial_truth;             // per target, scenario order
  std::vector<TrackState> initial_estimates;   // per target, scenario order
  std::vector<StepRecord> records;             // step-major, target order
  std::vector<Score> objectives;               // per step

  // Records of one target in step order.
  std::vector<const StepRecord*> TargetRecords(TargetId target) const;
};

// Random scenario: positions i.i.d. uniform in `bounds`, stationary targets,
// coincident points re-drawn. Deterministic in `seed`.
Scenario RandomScenario(int n_sensors, int n_targets, const Bounds& bounds, double u_max,
                        uint64_t seed);

// Closed-loop run. The known-control measures receive the control each
// target applied in the previous step (zero at the first step).
RunLog Run(const Scenario& scenario, SolverKind solver, const MeasureKind& measure);

struct EvenRow {
  int n_sensors = 0;
  int n_targets = 0;
  int trials = 0;
  double reference = 0.0;         // N / L
  double mean_count = 0.0;        // over targets and trials
  std::vector<double> target_mean;  // per target index, over trials
  double max_target_mean_dev = 0.0;  // max |target_mean - N/L|
  double max_trial_dev = 0.0;        // max single-trial |count - N/L|
};

// Greedy general assignment with the trace measure on random scenarios in
// [0,100]^2. Trial t at N sensors uses stream Split(Split(seed, N), t).
std::vector<EvenRow> ExperimentEvenAssignment(int n_targets, const std::vector<int>& n_values,
                                              int trials, uint64_t seed);

struct RatioTrial {
  int n_targets = 0;
  int n_sensors = 0;
  int trial = 0;
  Score greedy;
  std::optional<Score> opt;  // absent when the brute-force guard tripped
  Score mwpbm;
};

struct RatioRow {
  int n_targets = 0;
  int n_sensors = 0;
  int trials = 0;
  bool opt_computed = false;
  // Means over trials whose three values are all finite.
  int finite_trials = 0;
  double mean_greedy = 0.0;
  double mean_opt = 0.0;
  double mean_mwpbm = 0.0;
  double mean_ratio_opt = 0.0;    // greedy / opt
  double min_ratio_opt = 0.0;
  double mean_ratio_mwpbm = 0.0;  // greedy / mwpbm
};

struct RatioTable {
  std::vector<RatioTrial> trials;
  std::vector<RatioRow> rows;
};

// Greedy vs brute force vs relaxed matching with N = 2L, random scenarios in
// [0,100]^2 and the given u_max. Brute force is skipped (opt absent) when
// the instance exceeds `brute_force_cap`.
RatioTable ExperimentRatio(const std::vector<int>& l_values, int trials,
                           const MeasureKind& measure, uint64_t seed, double u_max = 1.0,
                           uint64_t brute_force_cap = kDefaultBruteForceCap);

}  // namespace obsassign

#endif  // OBSASSIGN_SIM_H_
