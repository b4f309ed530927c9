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

#ifndef POSETKIT_BIG_COUNT_HPP_
#define POSETKIT_BIG_COUNT_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace posetkit {

// Arbitrary-precision count. Every count the library reports is nonnegative.
using BigCount = boost::multiprecision::cpp_int;

inline std::string ToDecimal(const BigCount& value) { return value.str(); }

inline BigCount Pow2(unsigned exponent) {
  BigCount result = 1;
  result <<= exponent;
  return result;
}

}  // namespace posetkit

#endif  // POSETKIT_BIG_COUNT_HPP_
