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

#include "obsassign/error.h"

namespace obsassign {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySensorSet: return "EmptySensorSet";
    case ErrorCode::kCoincidentPositions: return "CoincidentPositions";
    case ErrorCode::kDegenerateMatrix: return "DegenerateMatrix";
    case ErrorCode::kControlRequired: return "ControlRequired";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kEmptyTargets: return "EmptyTargets";
    case ErrorCode::kInsufficientSensors: return "InsufficientSensors";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kUnknownSensor: return "UnknownSensor";
    case ErrorCode::kUsage: return "UsageError";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Error";
}

}  // namespace obsassign
