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

#include "obsassign/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "obsassign/rng.h"
#include "obsassign/setfunc.h"

namespace obsassign::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void Usage(const std::string& message) { throw Error(ErrorCode::kUsage, message); }

int ParseIntToken(const std::string& token, const std::string& flag) {
  try {
    size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) Usage(flag + ": not an integer: '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    Usage(flag + ": not an integer: '" + token + "'");
  }
}

}  // namespace

std::vector<int> ParseIntRange(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(ParseIntToken(part, flag));
      continue;
    }
    const int lo = ParseIntToken(part.substr(0, dots), flag);
    const int hi = ParseIntToken(part.substr(dots + 2), flag);
    if (lo > hi) Usage(flag + ": empty range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) Usage(flag + ": empty range");
  return out;
}

RunConfig ParseArgs(const std::vector<std::string>& args) {
  RunConfig cfg;
  if (const char* env = std::getenv("OBS_BRUTE_FORCE_CAP"); env != nullptr && *env != '\0') {
    try {
      size_t used = 0;
      cfg.brute_force_cap = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      Usage("OBS_BRUTE_FORCE_CAP: not a nonnegative integer: '" + std::string(env) + "'");
    }
  }

  CLI::App app{"Observability-driven sensor-to-target assignment", "obsassign"};
  app.require_subcommand(1);

  std::string scenario, solver = "greedy-general", measure = "trace", matrix = "rel", out = ".";
  std::string l_range, n_range;
  std::optional<int> sensors, targets;
  std::optional<double> world, umax;
  std::optional<uint64_t> seed, cap;
  std::optional<int> horizon;
  std::optional<double> noise;
  int trials = 30;
  uint64_t samples = 500;
  bool exhaustive = false;

  auto add_scenario_source = [&](CLI::App* sub) {
    auto* path = sub->add_option("--scenario", scenario, "Scenario JSON file");
    auto* n = sub->add_option("--sensors", sensors, "Generate: number of sensors");
    sub->add_option("--targets", targets, "Generate: number of targets");
    sub->add_option("--world", world, "Generate: side of the square world (m)");
    sub->add_option("--umax", umax, "Generate: target speed bound (m/s)");
    path->excludes(n);
  };
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", measure,
                    "trace | rank | logdet | invcond-lb | invcond-exact");
    sub->add_option("--matrix", matrix, "rel | full");
  };

  CLI::App* run = app.add_subcommand("run", "Closed-loop tracking simulation");
  add_scenario_source(run);
  add_measure(run);
  run->add_option("--solver", solver, "greedy-general | greedy-pairs");
  run->add_option("--seed", seed, "RNG seed (overrides the scenario's)");
  run->add_option("--out", out, "Output directory");
  run->add_option("--horizon", horizon, "Override the number of steps");
  run->add_option("--noise", noise, "Override the measurement noise variance");

  CLI::App* experiment = app.add_subcommand("experiment", "Batch experiments");
  experiment->require_subcommand(1);
  CLI::App* even = experiment->add_subcommand("even", "Sensors per target under greedy general");
  even->add_option("--L", l_range, "Number of targets")->required();
  even->add_option("--N", n_range, "Sensor counts, e.g. 20..50");
  even->add_option("--trials", trials, "Trials per N");
  even->add_option("--seed", seed, "Master seed");
  even->add_option("--out", out, "Output directory");
  CLI::App* ratio = experiment->add_subcommand("ratio", "Greedy vs optimum vs relaxation");
  ratio->add_option("--L", l_range, "Target counts, e.g. 1..5")->required();
  ratio->add_option("--trials", trials, "Trials per L");
  ratio->add_option("--umax", umax, "Target speed bound (m/s)");
  ratio->add_option("--seed", seed, "Master seed");
  ratio->add_option("--out", out, "Output directory");
  ratio->add_option("--brute-force-cap", cap, "Enumeration guard");
  add_measure(ratio);

  CLI::App* check = app.add_subcommand("check", "Set-function property checks");
  check->require_subcommand(1);
  CLI::App* lattice = check->add_subcommand("lattice", "Monotonicity/submodularity sampling");
  add_scenario_source(lattice);
  add_measure(lattice);
  lattice->add_option("--samples", samples, "Samples per target");
  lattice->add_flag("--exhaustive", exhaustive, "Enumerate every (A, B, r)");
  lattice->add_option("--seed", seed, "Sampling seed");
  lattice->add_option("--out", out, "Output directory");

  CLI::App* gen = app.add_subcommand("gen", "Generators");
  gen->require_subcommand(1);
  CLI::App* gen_scenario = gen->add_subcommand("scenario", "Write a random scenario file");
  gen_scenario->add_option("--sensors", sensors, "Number of sensors")->required();
  gen_scenario->add_option("--targets", targets, "Number of targets")->required();
  gen_scenario->add_option("--world", world, "Side of the square world (m)");
  gen_scenario->add_option("--umax", umax, "Target speed bound (m/s)");
  gen_scenario->add_option("--horizon", horizon, "Number of steps");
  gen_scenario->add_option("--seed", seed, "Seed");
  gen_scenario->add_option("--out", out, "Output file (.json) or directory");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream text;
    const int code = app.exit(e, text, text);
    if (code == 0) {
      cfg.help = true;
      cfg.help_text = text.str();
      return cfg;
    }
    Usage(e.what());
  }

  const auto parse_measure = [&] {
    const auto type = ParseMeasureName(measure);
    if (!type) Usage("--measure: unknown measure '" + measure + "'");
    if (matrix != "rel" && matrix != "full") Usage("--matrix: expected rel or full, got '" + matrix + "'");
    cfg.measure = MeasureKind{*type, matrix == "full", std::nullopt};
  };
  const auto generator = [&] {
    GeneratorParams g;
    if (sensors) g.sensors = *sensors;
    if (targets) g.targets = *targets;
    if (world) g.bounds = Bounds{{0.0, 0.0}, {*world, *world}};
    if (umax) g.u_max = *umax;
    if (g.sensors < 1) Usage("--sensors: must be >= 1");
    if (g.targets < 1) Usage("--targets: must be >= 1");
    if (world && !(*world > 0.0)) Usage("--world: must be > 0");
    if (umax && !(*umax >= 0.0)) Usage("--umax: must be >= 0");
    return g;
  };
  const auto scenario_source = [&] {
    if (!scenario.empty()) {
      if (targets || world || umax) Usage("--scenario: cannot be combined with generator flags");
      cfg.scenario_path = scenario;
    } else if (sensors || targets) {
      cfg.generator = generator();
    } else {
      Usage("--scenario or --sensors/--targets is required");
    }
  };

  cfg.out = out;
  cfg.seed = seed;
  cfg.horizon = horizon;
  cfg.measurement_var = noise;
  cfg.trials = trials;
  cfg.samples = samples;
  cfg.exhaustive = exhaustive;
  if (cap) cfg.brute_force_cap = *cap;
  if (trials < 1) Usage("--trials: must be >= 1");
  if (horizon && *horizon < 1) Usage("--horizon: must be >= 1");
  if (noise && !(*noise >= 0.0)) Usage("--noise: must be >= 0");

  if (run->parsed()) {
    cfg.command = Command::kRun;
    scenario_source();
    parse_measure();
    const auto s = ParseSolverName(solver);
    if (!s) Usage("--solver: unknown solver '" + solver + "'");
    cfg.solver = *s;
  } else if (even->parsed()) {
    cfg.command = Command::kExperimentEven;
    const std::vector<int> l = ParseIntRange(l_range, "--L");
    if (l.size() != 1 || l[0] < 1) Usage("--L: expected a single target count >= 1");
    cfg.n_targets = l[0];
    cfg.n_values = n_range.empty() ? ParseIntRange("20..50", "--N") : ParseIntRange(n_range, "--N");
    for (int n : cfg.n_values) {
      if (n < 1) Usage("--N: sensor counts must be >= 1");
    }
  } else if (ratio->parsed()) {
    cfg.command = Command::kExperimentRatio;
    cfg.l_values = ParseIntRange(l_range, "--L");
    for (int l : cfg.l_values) {
      if (l < 1) Usage("--L: target counts must be >= 1");
    }
    if (umax) {
      if (!(*umax >= 0.0)) Usage("--umax: must be >= 0");
      cfg.u_max = *umax;
    }
    parse_measure();
  } else if (lattice->parsed()) {
    cfg.command = Command::kCheckLattice;
    scenario_source();
    parse_measure();
    if (samples < 1) Usage("--samples: must be >= 1");
  } else if (gen_scenario->parsed()) {
    cfg.command = Command::kGenScenario;
    cfg.generator = generator();
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Scenario files

namespace {

ordered_json VecJson(Vec2 v) { return ordered_json::array({v.x, v.y}); }

Vec2 VecFrom(const ordered_json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::kParse, field + ": expected [x, y]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const ordered_json& Field(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParse, where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

template <typename T>
T Get(const ordered_json& j, const std::string& field) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::kParse, field + ": wrong type");
  }
}

}  // namespace

std::string ScenarioToJson(const Scenario& s) {
  ordered_json j;
  j["world"] = {{"min", VecJson(s.bounds.min)}, {"max", VecJson(s.bounds.max)}};
  j["horizon"] = s.horizon;
  j["dt"] = s.dt;
  j["seed"] = s.seed;
  j["noise"] = {{"measurement_var", s.noise.measurement_var},
                {"initial_cov_scale", s.noise.initial_cov_scale},
                {"initial_mean_var", s.noise.initial_mean_var}};
  j["sensors"] = ordered_json::array();
  for (const Sensor& sensor : s.sensors) {
    j["sensors"].push_back({{"id", sensor.id.value}, {"position", VecJson(sensor.position)}});
  }
  j["targets"] = ordered_json::array();
  for (const TargetSpec& t : s.targets) {
    ordered_json motion;
    if (const auto* c = std::get_if<CircleMotion>(&t.motion)) {
      motion = {{"type", "circle"},
                {"center", VecJson(c->center)},
                {"radius", c->radius},
                {"angular_rate", c->angular_rate}};
    } else if (const auto* w = std::get_if<WaypointMotion>(&t.motion)) {
      ordered_json points = ordered_json::array();
      for (const Vec2& p : w->points) points.push_back(VecJson(p));
      motion = {{"type", "waypoints"}, {"points", points}, {"loop", w->loop}};
    } else {
      motion = {{"type", "stationary"}};
    }
    j["targets"].push_back({{"id", t.id.value},
                            {"position", VecJson(t.initial_position)},
                            {"u_max", t.u_max},
                            {"motion", motion}});
  }
  return j.dump(2) + "\n";
}

Scenario ScenarioFromJson(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kParse, "scenario must be a JSON object");

  Scenario s;
  const ordered_json& world = Field(j, "world", "scenario");
  s.bounds = {VecFrom(Field(world, "min", "world"), "world.min"),
              VecFrom(Field(world, "max", "world"), "world.max")};
  if (j.contains("horizon")) s.horizon = Get<int>(j["horizon"], "horizon");
  if (j.contains("dt")) s.dt = Get<double>(j["dt"], "dt");
  if (j.contains("seed")) s.seed = Get<uint64_t>(j["seed"], "seed");
  if (j.contains("noise")) {
    const ordered_json& n = j["noise"];
    if (n.contains("measurement_var")) {
      s.noise.measurement_var = Get<double>(n["measurement_var"], "noise.measurement_var");
    }
    if (n.contains("initial_cov_scale")) {
      s.noise.initial_cov_scale = Get<double>(n["initial_cov_scale"], "noise.initial_cov_scale");
    }
    if (n.contains("initial_mean_var")) {
      s.noise.initial_mean_var = Get<double>(n["initial_mean_var"], "noise.initial_mean_var");
    }
  }

  const ordered_json& sensors = Field(j, "sensors", "scenario");
  if (!sensors.is_array()) throw Error(ErrorCode::kParse, "sensors: expected an array");
  for (size_t i = 0; i < sensors.size(); ++i) {
    const std::string where = "sensors[" + std::to_string(i) + "]";
    s.sensors.push_back({SensorId{Get<int32_t>(Field(sensors[i], "id", where), where + ".id")},
                         VecFrom(Field(sensors[i], "position", where), where + ".position")});
  }

  const ordered_json& targets = Field(j, "targets", "scenario");
  if (!targets.is_array()) throw Error(ErrorCode::kParse, "targets: expected an array");
  for (size_t i = 0; i < targets.size(); ++i) {
    const std::string where = "targets[" + std::to_string(i) + "]";
    const ordered_json& t = targets[i];
    TargetSpec spec;
    spec.id = TargetId{Get<int32_t>(Field(t, "id", where), where + ".id")};
    spec.initial_position = VecFrom(Field(t, "position", where), where + ".position");
    spec.u_max = Get<double>(Field(t, "u_max", where), where + ".u_max");
    spec.motion = StationaryMotion{};
    if (t.contains("motion")) {
      const ordered_json& m = t["motion"];
      const std::string mwhere = where + ".motion";
      const std::string type = Get<std::string>(Field(m, "type", mwhere), mwhere + ".type");
      if (type == "circle") {
        spec.motion = CircleMotion{VecFrom(Field(m, "center", mwhere), mwhere + ".center"),
                                   Get<double>(Field(m, "radius", mwhere), mwhere + ".radius"),
                                   Get<double>(Field(m, "angular_rate", mwhere),
                                               mwhere + ".angular_rate")};
      } else if (type == "waypoints") {
        WaypointMotion w;
        const ordered_json& pts = Field(m, "points", mwhere);
        if (!pts.is_array()) throw Error(ErrorCode::kParse, mwhere + ".points: expected an array");
        for (size_t k = 0; k < pts.size(); ++k) {
          w.points.push_back(VecFrom(pts[k], mwhere + ".points[" + std::to_string(k) + "]"));
        }
        if (m.contains("loop")) w.loop = Get<bool>(m["loop"], mwhere + ".loop");
        spec.motion = std::move(w);
      } else if (type != "stationary") {
        throw Error(ErrorCode::kParse, mwhere + ".type: unknown motion '" + type + "'");
      }
    }
    s.targets.push_back(std::move(spec));
  }

  s.Validate();
  return s;
}

Scenario LoadScenario(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return ScenarioFromJson(text.str());
}

namespace {

std::ofstream OpenForWrite(const fs::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

void Finish(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace

void SaveScenario(const Scenario& scenario, const fs::path& path) {
  std::ofstream out = OpenForWrite(path);
  out << ScenarioToJson(scenario);
  Finish(out, path);
}

// ---------------------------------------------------------------------------
// CSV

std::string FormatReal(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string FormatScore(Score s) { return s.is_neg_inf() ? "-inf" : FormatReal(s.value()); }

fs::path WriteTrackCsv(const RunLog& log, const fs::path& out_dir) {
  const fs::path path = out_dir / "track.csv";
  std::ofstream out = OpenForWrite(path);
  out << "step,target,true_x,true_y,est_x,est_y,cov_trace,mean_err,assigned_sensors,"
         "measure_value\n";
  for (const StepRecord& r : log.records) {
    std::string assigned;
    for (size_t i = 0; i < r.assigned.size(); ++i) {
      if (i > 0) assigned += ';';
      assigned += std::to_string(r.assigned[i].value);
    }
    out << r.step << ',' << r.target.value << ',' << FormatReal(r.truth.x) << ','
        << FormatReal(r.truth.y) << ',' << FormatReal(r.estimate.mean.x) << ','
        << FormatReal(r.estimate.mean.y) << ',' << FormatReal(CovTrace(r.estimate)) << ','
        << FormatReal(MeanError(r.estimate, r.truth)) << ',' << assigned << ','
        << FormatScore(r.measure_value) << '\n';
  }
  Finish(out, path);
  return path;
}

fs::path WriteEvenCsv(const std::vector<EvenRow>& rows, const fs::path& out_dir) {
  const fs::path path = out_dir / "even.csv";
  std::ofstream out = OpenForWrite(path);
  out << "N,L,trials,reference,mean_count,max_target_mean_dev,max_trial_dev,target_means\n";
  for (const EvenRow& r : rows) {
    std::string means;
    for (size_t i = 0; i < r.target_mean.size(); ++i) {
      if (i > 0) means += ';';
      means += FormatReal(r.target_mean[i]);
    }
    out << r.n_sensors << ',' << r.n_targets << ',' << r.trials << ',' << FormatReal(r.reference)
        << ',' << FormatReal(r.mean_count) << ',' << FormatReal(r.max_target_mean_dev) << ','
        << FormatReal(r.max_trial_dev) << ',' << means << '\n';
  }
  Finish(out, path);
  return path;
}

std::vector<fs::path> WriteRatioCsv(const RatioTable& table, const fs::path& out_dir) {
  const fs::path trials_path = out_dir / "ratio.csv";
  {
    std::ofstream out = OpenForWrite(trials_path);
    out << "L,N,trial,greedy,opt,mwpbm\n";
    for (const RatioTrial& t : table.trials) {
      out << t.n_targets << ',' << t.n_sensors << ',' << t.trial << ',' << FormatScore(t.greedy)
          << ',' << (t.opt ? FormatScore(*t.opt) : std::string()) << ','
          << FormatScore(t.mwpbm) << '\n';
    }
    Finish(out, trials_path);
  }
  const fs::path summary_path = out_dir / "ratio_summary.csv";
  {
    std::ofstream out = OpenForWrite(summary_path);
    out << "L,N,trials,finite_trials,opt_computed,mean_greedy,mean_opt,mean_mwpbm,"
           "mean_greedy_over_opt,min_greedy_over_opt,mean_greedy_over_mwpbm\n";
    for (const RatioRow& r : table.rows) {
      out << r.n_targets << ',' << r.n_sensors << ',' << r.trials << ',' << r.finite_trials << ','
          << (r.opt_computed ? 1 : 0) << ',' << FormatReal(r.mean_greedy) << ','
          << FormatReal(r.mean_opt) << ',' << FormatReal(r.mean_mwpbm) << ','
          << FormatReal(r.mean_ratio_opt) << ',' << FormatReal(r.min_ratio_opt) << ','
          << FormatReal(r.mean_ratio_mwpbm) << '\n';
    }
    Finish(out, summary_path);
  }
  return {trials_path, summary_path};
}

// ---------------------------------------------------------------------------
// Driver

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return 2;
    case ErrorCode::kInstanceTooLarge: return 4;
    case ErrorCode::kIo: return 5;
    default: return 3;
  }
}

namespace {

Scenario ResolveScenario(const RunConfig& cfg) {
  Scenario s;
  if (cfg.scenario_path) {
    s = LoadScenario(*cfg.scenario_path);
  } else {
    const GeneratorParams& g = *cfg.generator;
    s = RandomScenario(g.sensors, g.targets, g.bounds, g.u_max, cfg.seed.value_or(0));
  }
  if (cfg.seed) s.seed = *cfg.seed;
  if (cfg.horizon) s.horizon = *cfg.horizon;
  if (cfg.measurement_var) s.noise.measurement_var = *cfg.measurement_var;
  s.Validate();
  return s;
}

void ExecuteRun(const RunConfig& cfg, std::ostream& out) {
  const Scenario s = ResolveScenario(cfg);
  ValidateRunSetup(s, cfg.solver, cfg.measure);
  const RunLog log = Run(s, cfg.solver, cfg.measure);
  const fs::path path = WriteTrackCsv(log, cfg.out);
  out << "wrote " << path.string() << '\n';
  for (size_t l = 0; l < s.targets.size(); ++l) {
    const auto recs = log.TargetRecords(s.targets[l].id);
    out << "target " << s.targets[l].id.value << ": initial_err="
        << FormatReal(Norm(log.initial_estimates[l].mean - log.initial_truth[l]))
        << " final_err=" << FormatReal(MeanError(recs.back()->estimate, recs.back()->truth))
        << '\n';
  }
}

void ExecuteLattice(const RunConfig& cfg, std::ostream& out) {
  const Scenario s = ResolveScenario(cfg);
  std::vector<TargetState> targets;
  for (const TargetSpec& t : s.targets) {
    targets.push_back({t.id, t.initial_position, t.u_max, std::nullopt});
  }
  if (cfg.measure.NeedsControl()) {
    throw Error(ErrorCode::kControlRequired,
                "check lattice evaluates static geometry; use --matrix rel");
  }
  ValueOracle oracle(cfg.measure, s.sensors, targets);
  const fs::path path = cfg.out / "lattice.csv";
  std::ofstream file = OpenForWrite(path);
  file << "target,samples,monotone_violations,submodular_violations,worst_violation,skipped\n";
  for (const TargetState& t : targets) {
    const LatticeReport r = cfg.exhaustive
                                ? CheckLatticeExhaustive(oracle, t.id)
                                : CheckLattice(oracle, t.id, cfg.samples,
                                               Rng::Split(cfg.seed.value_or(0),
                                                          static_cast<uint64_t>(t.id.value)));
    file << t.id.value << ',' << r.samples << ',' << r.monotone_violations << ','
         << r.submodular_violations << ',' << FormatReal(r.worst_violation) << ',' << r.skipped
         << '\n';
    out << "target " << t.id.value << ": samples=" << r.samples
        << " monotone_violations=" << r.monotone_violations
        << " submodular_violations=" << r.submodular_violations << '\n';
  }
  Finish(file, path);
  out << "wrote " << path.string() << '\n';
}

void Execute(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::kRun:
      ExecuteRun(cfg, out);
      return;
    case Command::kExperimentEven: {
      const auto rows =
          ExperimentEvenAssignment(cfg.n_targets, cfg.n_values, cfg.trials, cfg.seed.value_or(0));
      out << "wrote " << WriteEvenCsv(rows, cfg.out).string() << '\n';
      return;
    }
    case Command::kExperimentRatio: {
      const RatioTable table = ExperimentRatio(cfg.l_values, cfg.trials, cfg.measure,
                                               cfg.seed.value_or(0), cfg.u_max,
                                               cfg.brute_force_cap);
      for (const fs::path& p : WriteRatioCsv(table, cfg.out)) out << "wrote " << p.string() << '\n';
      return;
    }
    case Command::kCheckLattice:
      ExecuteLattice(cfg, out);
      return;
    case Command::kGenScenario: {
      const GeneratorParams& g = *cfg.generator;
      Scenario s = RandomScenario(g.sensors, g.targets, g.bounds, g.u_max, cfg.seed.value_or(0));
      if (cfg.horizon) s.horizon = *cfg.horizon;
      const fs::path path =
          cfg.out.extension() == ".json" ? cfg.out : cfg.out / "scenario.json";
      SaveScenario(s, path);
      out << "wrote " << path.string() << '\n';
      return;
    }
  }
}

}  // namespace

int RunMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = ParseArgs(args);
    if (cfg.help) {
      out << cfg.help_text;
      return 0;
    }
    Execute(cfg, out);
    return 0;
  } catch (const Error& e) {
    err << "obsassign: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "obsassign: internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace obsassign::cli
