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

// Position-only extended Kalman filter for range sensors.
//
// Each sensor reports z = 0.5 * ||p_s - p||^2 + noise, so the Jacobian row of
// a measurement is (p - p_s)^T: exactly the sensor's row of the relative
// state matrix. The motion model is p(k+1) = p(k) + u dt with the unknown u
// treated as zero-mean noise of size u_max.

#ifndef OBSASSIGN_TRACKING_H_
#define OBSASSIGN_TRACKING_H_

#include <span>

#include "obsassign/matkernel.h"
#include "obsassign/observability.h"

namespace obsassign {

struct TrackState {
  Vec2 mean;
  Sym2 covariance;

  friend bool operator==(const TrackState&, const TrackState&) = default;
};

struct Measurement {
  SensorId sensor;
  double value = 0.0;      // half squared range, m^2
  double noise_var = 1.0;  // m^4
};

double HalfSquaredRange(Vec2 sensor, Vec2 target);

// Covariance grows by (u_max * dt)^2 I; the mean is unchanged.
TrackState EkfPredict(const TrackState& state, double u_max, double dt);

// One stacked update with every measurement. Joseph-form covariance,
// symmetrized, with eigenvalues clamped at zero. Throws kUnknownSensor.
TrackState EkfUpdate(const TrackState& state, std::span<const Measurement> measurements,
                     std::span<const Sensor> sensors);

double MeanError(const TrackState& state, Vec2 truth);
double CovTrace(const TrackState& state);

// Projects a symmetric matrix onto the PSD cone by clamping eigenvalues.
Sym2 ClampPsd(const Sym2& m);

}  // namespace obsassign

#endif  // OBSASSIGN_TRACKING_H_
