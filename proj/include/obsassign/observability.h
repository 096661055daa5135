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

// Observability matrices of range-only sensor networks and the set-function
// measures derived from them.
//
// For a target at p with control u observed by sensors s_1 < ... < s_N, the
// local observability matrix has rows (p - p_{s_i}) followed by one control
// row u. The first N rows are known from geometry, the control row is not,
// which is why the library also offers a lower bound on the inverse
// condition number that only needs an upper bound on ||u||.
//
// Units: meters for positions, meters/second for controls, and a fixed
// time step of one second so both kinds of row share a scale.

#ifndef OBSASSIGN_OBSERVABILITY_H_
#define OBSASSIGN_OBSERVABILITY_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obsassign/matkernel.h"

namespace obsassign {

template <typename Tag>
struct StrongId {
  int32_t value = 0;

  friend auto operator<=>(const StrongId&, const StrongId&) = default;
};

struct SensorTag {};
struct TargetTag {};
using SensorId = StrongId<SensorTag>;
using TargetId = StrongId<TargetTag>;

struct Sensor {
  SensorId id;
  Vec2 position;

  friend bool operator==(const Sensor&, const Sensor&) = default;
};

struct TargetState {
  TargetId id;
  Vec2 position;
  double u_max = 0.0;
  // Known control input, when the caller has one.
  std::optional<Vec2> control;
};

// A measure value, or the out-of-band "minus infinity" produced by the log
// determinant of a singular matrix. Sums containing the sentinel stay at the
// sentinel, and the sentinel orders below every finite score.
class Score {
 public:
  constexpr Score() = default;
  constexpr explicit Score(double v) : value_(v) {}

  static constexpr Score NegInf() {
    Score s;
    s.neg_inf_ = true;
    return s;
  }

  bool is_neg_inf() const { return neg_inf_; }
  // -infinity for the sentinel; only meant for reporting.
  double value() const;
  // Value or the given stand-in when the sentinel is set.
  double value_or(double fallback) const { return neg_inf_ ? fallback : value_; }

  Score& operator+=(Score other);
  friend Score operator+(Score a, Score b) { return a += b; }
  friend std::partial_ordering operator<=>(const Score& a, const Score& b);
  friend bool operator==(const Score& a, const Score& b);

 private:
  double value_ = 0.0;
  bool neg_inf_ = false;
};

enum class MeasureType {
  kInvCondLowerBound,
  kInvCondExact,
  kTrace,
  kRank,
  kLogDet,
};

struct MeasureKind {
  MeasureType type = MeasureType::kTrace;
  // Evaluate on the full (N+1) x 2 matrix instead of the N x 2 relative
  // state matrix. Ignored by kInvCondLowerBound.
  bool full_matrix = false;
  // Control used for the full matrix; falls back to the target's own.
  std::optional<Vec2> control;

  bool NeedsControl() const;
};

std::string_view MeasureName(MeasureType type);
std::optional<MeasureType> ParseMeasureName(std::string_view name);

// Rows target - sensor, in the given order. Throws kEmptySensorSet on an
// empty list and kCoincidentPositions when a sensor sits on the target.
TallMatrix RelativeStateMatrix(std::span<const Sensor> sensors,
                               const TargetState& target);
// Same, for the common case where only positions are at hand.
TallMatrix RelativeStateMatrix(std::span<const Vec2> sensor_positions,
                               Vec2 target_position);

TallMatrix FullObservabilityMatrix(const TallMatrix& rel, Vec2 control);

// sigma_min / sigma_max. Throws kDegenerateMatrix for the zero matrix.
double InvConditionNumber(std::span<const Vec2> rows);

// sigma_min(O(p)) / sqrt(sigma_max(O(p))^2 + u_max^2): a lower bound on the
// inverse condition number of O(p, u) valid for every ||u|| <= u_max.
double InvCondLowerBound(std::span<const Vec2> rel, double u_max);

// Determinant of rows^T rows by Cauchy-Binet; exact zero for one row.
double GramDet(std::span<const Vec2> rows);

// Scale-aware singularity threshold used by the log-determinant measure.
bool IsSingularGram(double det, double trace);

// Value of a measure for a sensor set observing a target. The empty set
// scores 0 for every measure.
Score MeasureValue(const MeasureKind& kind, std::span<const Sensor> sensors,
                   const TargetState& target);

}  // namespace obsassign

template <typename Tag>
struct std::hash<obsassign::StrongId<Tag>> {
  size_t operator()(const obsassign::StrongId<Tag>& id) const noexcept {
    return std::hash<int32_t>{}(id.value);
  }
};

#endif  // OBSASSIGN_OBSERVABILITY_H_
