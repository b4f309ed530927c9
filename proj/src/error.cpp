// Copyright 2026 The posetkit Authors. All Rights Reserved.
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

#include "posetkit/error.hpp"

namespace posetkit {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kCycleDetected: return "CycleDetected";
    case ErrorCode::kNotAnAntichain: return "NotAnAntichain";
    case ErrorCode::kNotADownset: return "NotADownset";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kNotTwoDimensional: return "NotTwoDimensional";
    case ErrorCode::kNotALinearExtension: return "NotALinearExtension";
    case ErrorCode::kSeparatingExtension: return "SeparatingExtension";
    case ErrorCode::kEqualSets: return "EqualSets";
    case ErrorCode::kMismatchedGroundSets: return "MismatchedGroundSets";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "Unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace posetkit
