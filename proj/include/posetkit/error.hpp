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

#ifndef POSETKIT_ERROR_HPP_
#define POSETKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace posetkit {

enum class ErrorCode {
  kParse,
  kInvalidArgument,
  kIndexOutOfRange,
  kCycleDetected,
  kNotAnAntichain,
  kNotADownset,
  kCapExceeded,
  kNotTwoDimensional,
  kNotALinearExtension,
  kSeparatingExtension,
  kEqualSets,
  kMismatchedGroundSets,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// All failures in the library surface as this exception; the C API maps the
// code onto a status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void Fail(ErrorCode code, const std::string& message);

}  // namespace posetkit

#endif  // POSETKIT_ERROR_HPP_
