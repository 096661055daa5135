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

// Command-line front end: argument parsing, scenario files, CSV output.
//
//   obsassign run (--scenario FILE | --sensors N --targets L) --solver S
//                 --measure M [--matrix rel|full] [--seed K] [--out DIR]
//   obsassign experiment even  --L 5 --N 20..50 --trials 30 [--seed K]
//   obsassign experiment ratio --L 1..5 --trials 30 --measure logdet
//   obsassign check lattice (--scenario FILE | ...) --measure M
//   obsassign gen scenario --sensors N --targets L [--seed K] --out FILE
//
// Exit status: 0 success, 2 usage, 3 validation, 4 runtime guard, 5 I/O.

#ifndef OBSASSIGN_CLI_H_
#define OBSASSIGN_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "obsassign/error.h"
#include "obsassign/observability.h"
#include "obsassign/sim.h"

namespace obsassign::cli {

enum class Command { kRun, kExperimentEven, kExperimentRatio, kCheckLattice, kGenScenario };

struct GeneratorParams {
  int sensors = 8;
  int targets = 3;
  Bounds bounds;
  double u_max = 1.0;
};

struct RunConfig {
  Command command = Command::kRun;
  bool help = false;
  std::string help_text;

  // Exactly one of these describes the scenario for run / check lattice.
  std::optional<std::filesystem::path> scenario_path;
  std::optional<GeneratorParams> generator;

  SolverKind solver = SolverKind::kGreedyGeneral;
  MeasureKind measure;
  std::filesystem::path out = ".";
  std::optional<uint64_t> seed;

  std::optional<int> horizon;
  std::optional<double> measurement_var;
  uint64_t brute_force_cap = kDefaultBruteForceCap;

  int n_targets = 5;             // experiment even: L
  std::vector<int> n_values;     // experiment even: N range
  std::vector<int> l_values;     // experiment ratio: L range
  int trials = 30;
  double u_max = 1.0;            // experiment ratio

  uint64_t samples = 500;        // check lattice
  bool exhaustive = false;
};

// Parses "a..b", "a,b,c" or a mix such as "1..3,7". Throws kUsage.
std::vector<int> ParseIntRange(const std::string& text, const std::string& flag);

// Validated configuration. Throws Error(kUsage) naming the offending flag.
// Reads OBS_BRUTE_FORCE_CAP for the default enumeration guard.
RunConfig ParseArgs(const std::vector<std::string>& args);

// Throws kIo when unreadable, kParse when malformed, kValidation when the
// scenario breaks an invariant (the message names the field).
Scenario LoadScenario(const std::filesystem::path& path);
Scenario ScenarioFromJson(const std::string& text);
std::string ScenarioToJson(const Scenario& scenario);
void SaveScenario(const Scenario& scenario, const std::filesystem::path& path);

// Each writer returns the path it produced; throws kIo.
std::filesystem::path WriteTrackCsv(const RunLog& log, const std::filesystem::path& out_dir);
std::filesystem::path WriteEvenCsv(const std::vector<EvenRow>& rows,
                                   const std::filesystem::path& out_dir);
std::vector<std::filesystem::path> WriteRatioCsv(const RatioTable& table,
                                                 const std::filesystem::path& out_dir);

std::string FormatReal(double v);
std::string FormatScore(Score s);

int ExitCodeFor(ErrorCode code);

// Full CLI: parse, execute, report. Returns the process exit status.
int RunMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obsassign::cli

#endif  // OBSASSIGN_CLI_H_
