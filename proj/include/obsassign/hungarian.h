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

#ifndef OBSASSIGN_HUNGARIAN_H_
#define OBSASSIGN_HUNGARIAN_H_

#include <vector>

namespace obsassign {

// Minimum-cost assignment of every row to a distinct column of a dense
// rows x cols cost matrix with rows <= cols (Kuhn-Munkres with potentials,
// shortest augmenting paths, O(rows^2 * cols)). Returns the column matched
// to each row. Throws kValidation when rows > cols or the matrix is ragged.
std::vector<int> SolveMinCostAssignment(const std::vector<std::vector<double>>& cost);

}  // namespace obsassign

#endif  // OBSASSIGN_HUNGARIAN_H_
