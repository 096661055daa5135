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

#ifndef OBSASSIGN_RNG_H_
#define OBSASSIGN_RNG_H_

#include <cstdint>
#include <random>

namespace obsassign {

// Seeded random stream. The engine is std::mt19937_64, whose output sequence
// is fixed by the standard; the conversions to uniform and normal variates
// are done here because the std distributions differ between library
// implementations and runs must be reproducible bit for bit.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Seed of the independent stream number `index` derived from `master`.
  static uint64_t Split(uint64_t master, uint64_t index);

  uint64_t Bits() { return engine_(); }
  // Uniform in [0, 1).
  double Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform01(); }
  // Uniform integer in [0, n), n > 0.
  uint64_t Below(uint64_t n);
  // Standard normal (Box-Muller, one variate per call).
  double Normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace obsassign

#endif  // OBSASSIGN_RNG_H_
