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

#include "obsassign/hungarian.h"

#include <limits>

#include "obsassign/error.h"

namespace obsassign {

std::vector<int> SolveMinCostAssignment(const std::vector<std::vector<double>>& cost) {
  const size_t n = cost.size();
  if (n == 0) return {};
  const size_t m = cost[0].size();
  for (const auto& row : cost) {
    if (row.size() != m) throw Error(ErrorCode::kValidation, "ragged cost matrix");
  }
  if (n > m) throw Error(ErrorCode::kValidation, "more rows than columns");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based internally; column 0 is the virtual source of each augmentation.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(m + 1, 0.0);
  std::vector<size_t> match(m + 1, 0);  // match[col] = row, 0 = free
  std::vector<size_t> way(m + 1, 0);

  for (size_t row = 1; row <= n; ++row) {
    match[0] = row;
    size_t col0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[col0] = true;
      const size_t row0 = match[col0];
      double delta = kInf;
      size_t col1 = 0;
      for (size_t col = 1; col <= m; ++col) {
        if (used[col]) continue;
        const double reduced = cost[row0 - 1][col - 1] - u[row0] - v[col];
        if (reduced < minv[col]) {
          minv[col] = reduced;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (size_t col = 0; col <= m; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    // Flip the augmenting path.
    do {
      const size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  std::vector<int> assignment(n, -1);
  for (size_t col = 1; col <= m; ++col) {
    if (match[col] != 0) assignment[match[col] - 1] = static_cast<int>(col - 1);
  }
  return assignment;
}

}  // namespace obsassign
