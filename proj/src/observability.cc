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

#include "obsassign/observability.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "obsassign/error.h"

namespace obsassign {

double Score::value() const {
  return neg_inf_ ? -std::numeric_limits<double>::infinity() : value_;
}

Score& Score::operator+=(Score other) {
  if (neg_inf_ || other.neg_inf_) {
    *this = NegInf();
  } else {
    value_ += other.value_;
  }
  return *this;
}

std::partial_ordering operator<=>(const Score& a, const Score& b) {
  if (a.neg_inf_ || b.neg_inf_) {
    return static_cast<int>(!a.neg_inf_) <=> static_cast<int>(!b.neg_inf_);
  }
  return a.value_ <=> b.value_;
}

bool operator==(const Score& a, const Score& b) {
  return (a <=> b) == std::partial_ordering::equivalent;
}

bool MeasureKind::NeedsControl() const {
  return full_matrix && type != MeasureType::kInvCondLowerBound;
}

std::string_view MeasureName(MeasureType type) {
  switch (type) {
    case MeasureType::kInvCondLowerBound: return "invcond-lb";
    case MeasureType::kInvCondExact: return "invcond-exact";
    case MeasureType::kTrace: return "trace";
    case MeasureType::kRank: return "rank";
    case MeasureType::kLogDet: return "logdet";
  }
  return "";
}

std::optional<MeasureType> ParseMeasureName(std::string_view name) {
  for (MeasureType t :
       {MeasureType::kInvCondLowerBound, MeasureType::kInvCondExact,
        MeasureType::kTrace, MeasureType::kRank, MeasureType::kLogDet}) {
    if (MeasureName(t) == name) return t;
  }
  return std::nullopt;
}

TallMatrix RelativeStateMatrix(std::span<const Vec2> sensor_positions,
                               Vec2 target_position) {
  if (sensor_positions.empty()) {
    throw Error(ErrorCode::kEmptySensorSet, "relative state matrix needs a sensor");
  }
  TallMatrix rows;
  rows.reserve(sensor_positions.size());
  for (const Vec2& s : sensor_positions) {
    const Vec2 r = target_position - s;
    if (r.x == 0.0 && r.y == 0.0) {
      throw Error(ErrorCode::kCoincidentPositions,
                  "target coincides with a sensor position");
    }
    rows.push_back(r);
  }
  return rows;
}

TallMatrix RelativeStateMatrix(std::span<const Sensor> sensors,
                               const TargetState& target) {
  std::vector<Vec2> positions;
  positions.reserve(sensors.size());
  for (const Sensor& s : sensors) positions.push_back(s.position);
  return RelativeStateMatrix(positions, target.position);
}

TallMatrix FullObservabilityMatrix(const TallMatrix& rel, Vec2 control) {
  TallMatrix full = rel;
  full.push_back(control);
  return full;
}

double GramDet(std::span<const Vec2> rows) {
  double det = 0.0;
  for (size_t i = 0; i < rows.size(); ++i) {
    for (size_t j = i + 1; j < rows.size(); ++j) {
      const double cross = rows[i].x * rows[j].y - rows[i].y * rows[j].x;
      det += cross * cross;
    }
  }
  return det;
}

namespace {

// Singular values with sigma_min taken from det / lambda_max, where the
// determinant comes from Cauchy-Binet. Rank-one inputs then give exactly 0.
Singular2 AccurateSingularValues(std::span<const Vec2> rows) {
  const Sym2 g = Gram(rows);
  const double lambda_max = EigSym2(g).lambda_max;
  if (lambda_max <= 0.0) return {0.0, 0.0};
  const double lambda_min = std::min(GramDet(rows) / lambda_max, lambda_max);
  return {std::sqrt(lambda_min), std::sqrt(lambda_max)};
}

}  // namespace

double InvConditionNumber(std::span<const Vec2> rows) {
  const Singular2 s = AccurateSingularValues(rows);
  if (s.sigma_max == 0.0) {
    throw Error(ErrorCode::kDegenerateMatrix, "all-zero matrix has no condition number");
  }
  return s.sigma_min / s.sigma_max;
}

double InvCondLowerBound(std::span<const Vec2> rel, double u_max) {
  if (rel.empty()) {
    throw Error(ErrorCode::kEmptySensorSet, "lower bound needs at least one sensor");
  }
  const Singular2 s = AccurateSingularValues(rel);
  const double denom = std::sqrt(s.sigma_max * s.sigma_max + u_max * u_max);
  if (denom == 0.0) {
    throw Error(ErrorCode::kDegenerateMatrix, "zero relative state and zero u_max");
  }
  return s.sigma_min / denom;
}

bool IsSingularGram(double det, double trace) {
  return det <= 1e-12 * std::max(trace * trace, kAbsFloor);
}

Score MeasureValue(const MeasureKind& kind, std::span<const Sensor> sensors,
                   const TargetState& target) {
  if (sensors.empty()) return Score(0.0);

  std::optional<Vec2> control = kind.control ? kind.control : target.control;
  if (kind.NeedsControl() && !control) {
    throw Error(ErrorCode::kControlRequired,
                std::string(MeasureName(kind.type)) + " on the full matrix needs a known control");
  }
  if (control && kind.NeedsControl() && Norm(*control) > target.u_max * (1 + 1e-12) + 1e-12) {
    throw Error(ErrorCode::kValidation, "control exceeds the target's u_max");
  }

  const TallMatrix rel = RelativeStateMatrix(sensors, target);
  if (kind.type == MeasureType::kInvCondLowerBound) {
    return Score(InvCondLowerBound(rel, target.u_max));
  }
  const TallMatrix rows = kind.full_matrix ? FullObservabilityMatrix(rel, *control) : rel;
  switch (kind.type) {
    case MeasureType::kInvCondExact:
      return Score(InvConditionNumber(rows));
    case MeasureType::kTrace: {
      double tr = 0.0;
      for (const Vec2& r : rows) tr += Dot(r, r);
      return Score(tr);
    }
    case MeasureType::kRank:
      return Score(static_cast<double>(NumericalRank(Gram(rows))));
    case MeasureType::kLogDet: {
      const double det = GramDet(rows);
      if (IsSingularGram(det, Gram(rows).trace())) return Score::NegInf();
      return Score(std::log(det));
    }
    case MeasureType::kInvCondLowerBound:
      break;
  }
  return Score(0.0);
}

}  // namespace obsassign
