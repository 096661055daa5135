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

#include "obsassign/sim.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "obsassign/error.h"
#include "obsassign/rng.h"

namespace obsassign {

namespace {

// The filter never sees a variance below this, so noise-free runs stay
// numerically well posed.
constexpr double kMinFilterVar = 1e-9;

[[noreturn]] void Invalid(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kValidation, field + ": " + what);
}

Vec2 Clip(Vec2 u, double limit) {
  const double n = Norm(u);
  if (n <= limit || n == 0.0) return u;
  return (limit / n) * u;
}

struct MotionState {
  size_t waypoint = 0;
  bool done = false;
};

// Control that moves the target along its motion during step k (1-based).
Vec2 NextControl(const TargetSpec& spec, MotionState& state, Vec2 position, int step,
                 double dt) {
  if (std::holds_alternative<CircleMotion>(spec.motion)) {
    const auto& c = std::get<CircleMotion>(spec.motion);
    const Vec2 offset = spec.initial_position - c.center;
    const double phase0 = (offset.x == 0.0 && offset.y == 0.0) ? 0.0 : std::atan2(offset.y, offset.x);
    const double phase = phase0 + c.angular_rate * dt * step;
    const Vec2 desired = c.center + c.radius * Vec2{std::cos(phase), std::sin(phase)};
    return Clip((1.0 / dt) * (desired - position), spec.u_max);
  }
  if (std::holds_alternative<WaypointMotion>(spec.motion)) {
    const auto& w = std::get<WaypointMotion>(spec.motion);
    if (state.done || w.points.empty()) return {0.0, 0.0};
    // Skip points we are already sitting on.
    for (size_t guard = 0; guard < w.points.size(); ++guard) {
      if (Norm(w.points[state.waypoint] - position) > 1e-9) break;
      if (state.waypoint + 1 < w.points.size()) {
        ++state.waypoint;
      } else if (w.loop) {
        state.waypoint = 0;
      } else {
        state.done = true;
        return {0.0, 0.0};
      }
    }
    return Clip((1.0 / dt) * (w.points[state.waypoint] - position), spec.u_max);
  }
  return {0.0, 0.0};
}

Assignment Solve(SolverKind solver, ValueOracle& oracle) {
  return solver == SolverKind::kGreedyPairs ? GreedyPairs(oracle) : GreedyGeneral(oracle);
}

}  // namespace

void Scenario::Validate() const {
  if (!(bounds.min.x < bounds.max.x && bounds.min.y < bounds.max.y) || !IsFinite(bounds.min) ||
      !IsFinite(bounds.max)) {
    Invalid("world", "bounds must be finite with min < max");
  }
  if (horizon < 1) Invalid("horizon", "must be at least 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) Invalid("dt", "must be positive");
  if (!(noise.measurement_var >= 0.0)) Invalid("noise.measurement_var", "must be >= 0");
  if (!(noise.initial_cov_scale > 0.0)) Invalid("noise.initial_cov_scale", "must be > 0");
  if (!(noise.initial_mean_var >= 0.0)) Invalid("noise.initial_mean_var", "must be >= 0");
  if (sensors.empty()) Invalid("sensors", "at least one sensor is required");

  std::set<SensorId> sensor_ids;
  for (size_t i = 0; i < sensors.size(); ++i) {
    const std::string field = "sensors[" + std::to_string(i) + "]";
    if (!sensor_ids.insert(sensors[i].id).second) Invalid(field + ".id", "duplicate id");
    if (!IsFinite(sensors[i].position) || !bounds.Contains(sensors[i].position)) {
      Invalid(field + ".position", "must lie inside the world bounds");
    }
    for (size_t j = 0; j < i; ++j) {
      if (sensors[j].position == sensors[i].position) {
        Invalid(field + ".position", "coincides with sensors[" + std::to_string(j) + "]");
      }
    }
  }

  std::set<TargetId> target_ids;
  for (size_t i = 0; i < targets.size(); ++i) {
    const TargetSpec& t = targets[i];
    const std::string field = "targets[" + std::to_string(i) + "]";
    if (!target_ids.insert(t.id).second) Invalid(field + ".id", "duplicate id");
    if (!(t.u_max >= 0.0) || !std::isfinite(t.u_max)) Invalid(field + ".u_max", "must be >= 0");
    if (!IsFinite(t.initial_position) || !bounds.Contains(t.initial_position)) {
      Invalid(field + ".position", "must lie inside the world bounds");
    }
    for (const Sensor& s : sensors) {
      if (s.position == t.initial_position) {
        Invalid(field + ".position", "coincides with a sensor");
      }
    }
    if (const auto* c = std::get_if<CircleMotion>(&t.motion)) {
      if (!(c->radius > 0.0)) Invalid(field + ".motion.radius", "must be > 0");
      if (!std::isfinite(c->angular_rate)) Invalid(field + ".motion.angular_rate", "must be finite");
      const Vec2 r{c->radius, c->radius};
      if (!bounds.Contains(c->center - r) || !bounds.Contains(c->center + r)) {
        Invalid(field + ".motion", "circle leaves the world bounds");
      }
    } else if (const auto* w = std::get_if<WaypointMotion>(&t.motion)) {
      if (w->points.empty()) Invalid(field + ".motion.points", "must not be empty");
      for (const Vec2& p : w->points) {
        if (!IsFinite(p) || !bounds.Contains(p)) {
          Invalid(field + ".motion.points", "waypoint outside the world bounds");
        }
      }
    }
  }
}

std::string_view SolverName(SolverKind solver) {
  return solver == SolverKind::kGreedyPairs ? "greedy-pairs" : "greedy-general";
}

std::optional<SolverKind> ParseSolverName(std::string_view name) {
  if (name == "greedy-general") return SolverKind::kGreedyGeneral;
  if (name == "greedy-pairs") return SolverKind::kGreedyPairs;
  return std::nullopt;
}

void ValidateRunSetup(const Scenario& scenario, SolverKind solver, const MeasureKind& measure) {
  (void)measure;
  scenario.Validate();
  if (scenario.targets.empty()) throw Error(ErrorCode::kEmptyTargets, "scenario has no targets");
  if (solver == SolverKind::kGreedyPairs &&
      scenario.sensors.size() < 2 * scenario.targets.size()) {
    throw Error(ErrorCode::kInsufficientSensors,
                "greedy-pairs needs N >= 2L (N=" + std::to_string(scenario.sensors.size()) +
                    ", L=" + std::to_string(scenario.targets.size()) + ")");
  }
}

std::vector<const StepRecord*> RunLog::TargetRecords(TargetId target) const {
  std::vector<const StepRecord*> out;
  for (const StepRecord& r : records) {
    if (r.target == target) out.push_back(&r);
  }
  return out;
}

Scenario RandomScenario(int n_sensors, int n_targets, const Bounds& bounds, double u_max,
                        uint64_t seed) {
  if (n_sensors < 1 || n_targets < 1) {
    throw Error(ErrorCode::kValidation, "random scenario needs at least one sensor and target");
  }
  Rng rng(seed);
  std::vector<Vec2> taken;
  auto draw = [&] {
    while (true) {
      const Vec2 p{rng.Uniform(bounds.min.x, bounds.max.x), rng.Uniform(bounds.min.y, bounds.max.y)};
      if (std::find(taken.begin(), taken.end(), p) == taken.end()) {
        taken.push_back(p);
        return p;
      }
    }
  };

  Scenario s;
  s.bounds = bounds;
  s.seed = seed;
  for (int i = 0; i < n_sensors; ++i) s.sensors.push_back({SensorId{i}, draw()});
  for (int l = 0; l < n_targets; ++l) {
    s.targets.push_back({TargetId{l}, draw(), u_max, StationaryMotion{}});
  }
  return s;
}

RunLog Run(const Scenario& scenario, SolverKind solver, const MeasureKind& measure) {
  ValidateRunSetup(scenario, solver, measure);
  const size_t n_targets = scenario.targets.size();
  const NoiseParams& noise = scenario.noise;
  const double meas_std = std::sqrt(noise.measurement_var);
  const double filter_var = std::max(noise.measurement_var, kMinFilterVar);
  Rng rng(scenario.seed);

  RunLog log;
  std::vector<Vec2> truth(n_targets);
  std::vector<Vec2> last_control(n_targets, Vec2{0.0, 0.0});
  std::vector<TrackState> track(n_targets);
  std::vector<MotionState> motion(n_targets);
  const double init_std = std::sqrt(noise.initial_mean_var);
  for (size_t l = 0; l < n_targets; ++l) {
    truth[l] = scenario.targets[l].initial_position;
    const double ex = rng.Normal();
    const double ey = rng.Normal();
    track[l] = {truth[l] + Vec2{init_std * ex, init_std * ey},
                Sym2::Identity(noise.initial_cov_scale)};
  }
  log.initial_truth = truth;
  log.initial_estimates = track;

  for (int step = 1; step <= scenario.horizon; ++step) {
    std::vector<TargetState> estimated;
    estimated.reserve(n_targets);
    for (size_t l = 0; l < n_targets; ++l) {
      const TargetSpec& spec = scenario.targets[l];
      estimated.push_back({spec.id, track[l].mean, spec.u_max, last_control[l]});
    }
    ValueOracle oracle(measure, scenario.sensors, std::move(estimated));
    const Assignment assignment = Solve(solver, oracle);
    log.objectives.push_back(assignment.objective);

    for (size_t l = 0; l < n_targets; ++l) {
      const TargetSpec& spec = scenario.targets[l];
      const Vec2 u = NextControl(spec, motion[l], truth[l], step, scenario.dt);
      truth[l] = truth[l] + scenario.dt * u;
      last_control[l] = u;
    }

    for (size_t l = 0; l < n_targets; ++l) {
      const TargetSpec& spec = scenario.targets[l];
      const TargetGroup* group = assignment.Find(spec.id);
      std::vector<Measurement> measurements;
      std::vector<Sensor> used;
      if (group != nullptr) {
        for (SensorId sid : group->sensors) {
          const auto it = std::find_if(scenario.sensors.begin(), scenario.sensors.end(),
                                       [&](const Sensor& s) { return s.id == sid; });
          used.push_back(*it);
          const double z = HalfSquaredRange(it->position, truth[l]) + meas_std * rng.Normal();
          measurements.push_back({sid, z, filter_var});
        }
      }
      track[l] = EkfPredict(track[l], spec.u_max, scenario.dt);
      track[l] = EkfUpdate(track[l], measurements, used);

      StepRecord rec;
      rec.step = step;
      rec.target = spec.id;
      rec.truth = truth[l];
      rec.estimate = track[l];
      if (group != nullptr) {
        rec.assigned = group->sensors;
        rec.measure_value = group->value;
      }
      log.records.push_back(std::move(rec));
    }
  }
  return log;
}

std::vector<EvenRow> ExperimentEvenAssignment(int n_targets, const std::vector<int>& n_values,
                                              int trials, uint64_t seed) {
  if (n_targets < 1 || trials < 1) {
    throw Error(ErrorCode::kValidation, "even-assignment experiment needs L >= 1 and trials >= 1");
  }
  const MeasureKind trace{MeasureType::kTrace, false, std::nullopt};
  const Bounds box;
  std::vector<EvenRow> rows;
  for (int n : n_values) {
    EvenRow row;
    row.n_sensors = n;
    row.n_targets = n_targets;
    row.trials = trials;
    row.reference = static_cast<double>(n) / n_targets;
    row.target_mean.assign(static_cast<size_t>(n_targets), 0.0);
    const uint64_t n_seed = Rng::Split(seed, static_cast<uint64_t>(n));
    double total = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Scenario s = RandomScenario(n, n_targets, box, 1.0,
                                        Rng::Split(n_seed, static_cast<uint64_t>(t)));
      std::vector<TargetState> targets;
      for (const TargetSpec& spec : s.targets) {
        targets.push_back({spec.id, spec.initial_position, spec.u_max, std::nullopt});
      }
      ValueOracle oracle(trace, s.sensors, std::move(targets));
      const Assignment a = GreedyGeneral(oracle);
      for (size_t l = 0; l < a.groups.size(); ++l) {
        const double count = static_cast<double>(a.groups[l].sensors.size());
        row.target_mean[l] += count / trials;
        total += count;
        row.max_trial_dev = std::max(row.max_trial_dev, std::abs(count - row.reference));
      }
    }
    row.mean_count = total / (static_cast<double>(trials) * n_targets);
    for (double m : row.target_mean) {
      row.max_target_mean_dev = std::max(row.max_target_mean_dev, std::abs(m - row.reference));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RatioTable ExperimentRatio(const std::vector<int>& l_values, int trials,
                           const MeasureKind& measure, uint64_t seed, double u_max,
                           uint64_t brute_force_cap) {
  if (trials < 1) throw Error(ErrorCode::kValidation, "ratio experiment needs trials >= 1");
  const Bounds box;
  RatioTable table;
  for (int l_count : l_values) {
    if (l_count < 1) throw Error(ErrorCode::kValidation, "ratio experiment needs L >= 1");
    const int n = 2 * l_count;
    const uint64_t l_seed = Rng::Split(seed, static_cast<uint64_t>(l_count));
    const bool run_opt =
        PairAssignmentCount(static_cast<uint64_t>(n), static_cast<uint64_t>(l_count)) <=
        brute_force_cap;

    RatioRow row;
    row.n_targets = l_count;
    row.n_sensors = n;
    row.trials = trials;
    row.opt_computed = run_opt;
    row.min_ratio_opt = std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
      const Scenario s = RandomScenario(n, l_count, box, u_max,
                                        Rng::Split(l_seed, static_cast<uint64_t>(t)));
      std::vector<TargetState> targets;
      for (const TargetSpec& spec : s.targets) {
        targets.push_back({spec.id, spec.initial_position, spec.u_max, std::nullopt});
      }
      ValueOracle oracle(measure, s.sensors, std::move(targets));

      RatioTrial trial;
      trial.n_targets = l_count;
      trial.n_sensors = n;
      trial.trial = t;
      trial.greedy = GreedyPairs(oracle).objective;
      if (run_opt) trial.opt = BruteForcePairs(oracle, brute_force_cap).objective;
      trial.mwpbm = RelaxedPairs(oracle).upper_bound;
      table.trials.push_back(trial);

      const bool finite = !trial.greedy.is_neg_inf() && !trial.mwpbm.is_neg_inf() &&
                          (!trial.opt || !trial.opt->is_neg_inf());
      if (!finite) continue;
      ++row.finite_trials;
      row.mean_greedy += trial.greedy.value();
      row.mean_mwpbm += trial.mwpbm.value();
      row.mean_ratio_mwpbm += trial.greedy.value() / trial.mwpbm.value();
      if (trial.opt) {
        const double ratio = trial.greedy.value() / trial.opt->value();
        row.mean_opt += trial.opt->value();
        row.mean_ratio_opt += ratio;
        row.min_ratio_opt = std::min(row.min_ratio_opt, ratio);
      }
    }
    if (row.finite_trials > 0) {
      const double k = row.finite_trials;
      row.mean_greedy /= k;
      row.mean_mwpbm /= k;
      row.mean_ratio_mwpbm /= k;
      row.mean_opt /= k;
      row.mean_ratio_opt /= k;
    }
    if (!run_opt || row.finite_trials == 0) {
      row.mean_opt = row.mean_ratio_opt = row.min_ratio_opt =
          std::numeric_limits<double>::quiet_NaN();
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace obsassign
