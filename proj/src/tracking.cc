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

#include "obsassign/tracking.h"

#include <Eigen/Dense>
#include <algorithm>
#include <string>

#include "obsassign/error.h"

namespace obsassign {

double HalfSquaredRange(Vec2 sensor, Vec2 target) {
  const Vec2 d = target - sensor;
  return 0.5 * Dot(d, d);
}

TrackState EkfPredict(const TrackState& state, double u_max, double dt) {
  if (!(dt > 0.0)) throw Error(ErrorCode::kValidation, "dt must be positive");
  const double q = (u_max * dt) * (u_max * dt);
  return {state.mean, state.covariance + Sym2::Identity(q)};
}

Sym2 ClampPsd(const Sym2& m) {
  const Eigen2 e = EigSym2(m);
  if (e.lambda_min >= 0.0) return m;
  // Rebuild from the major eigenpair only.
  const Vec2 v = MajorEigenvector(m);
  const double lmax = std::max(e.lambda_max, 0.0);
  return {lmax * v.x * v.x, lmax * v.x * v.y, lmax * v.y * v.y};
}

TrackState EkfUpdate(const TrackState& state, std::span<const Measurement> measurements,
                     std::span<const Sensor> sensors) {
  if (measurements.empty()) return state;

  const Eigen::Index m = static_cast<Eigen::Index>(measurements.size());
  Eigen::MatrixXd h(m, 2);
  Eigen::VectorXd innovation(m);
  Eigen::VectorXd noise(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Measurement& z = measurements[static_cast<size_t>(i)];
    const Sensor* sensor = nullptr;
    for (const Sensor& s : sensors) {
      if (s.id == z.sensor) sensor = &s;
    }
    if (sensor == nullptr) {
      throw Error(ErrorCode::kUnknownSensor,
                  "measurement from unknown sensor " + std::to_string(z.sensor.value));
    }
    if (!(z.noise_var > 0.0)) {
      throw Error(ErrorCode::kValidation, "measurement noise variance must be positive");
    }
    const Vec2 row = state.mean - sensor->position;
    h(i, 0) = row.x;
    h(i, 1) = row.y;
    innovation(i) = z.value - HalfSquaredRange(sensor->position, state.mean);
    noise(i) = z.noise_var;
  }

  Eigen::Matrix2d p;
  p << state.covariance.a11, state.covariance.a12, state.covariance.a12,
      state.covariance.a22;
  const Eigen::MatrixXd r = noise.asDiagonal();
  const Eigen::MatrixXd s = h * p * h.transpose() + r;
  // K = P H^T S^-1, computed as (S^-1 H P)^T since S and P are symmetric.
  const Eigen::MatrixXd k = s.ldlt().solve(h * p).transpose();

  const Eigen::Vector2d correction = k * innovation;
  const Eigen::Matrix2d a = Eigen::Matrix2d::Identity() - k * h;
  Eigen::Matrix2d post = a * p * a.transpose() + k * r * k.transpose();
  post = 0.5 * (post + post.transpose());

  TrackState out;
  out.mean = {state.mean.x + correction(0), state.mean.y + correction(1)};
  out.covariance = ClampPsd({post(0, 0), post(0, 1), post(1, 1)});
  return out;
}

double MeanError(const TrackState& state, Vec2 truth) { return Norm(state.mean - truth); }

double CovTrace(const TrackState& state) { return state.covariance.trace(); }

}  // namespace obsassign
