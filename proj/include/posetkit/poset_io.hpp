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

#ifndef POSETKIT_POSET_IO_HPP_
#define POSETKIT_POSET_IO_HPP_

#include <string>
#include <string_view>

#include "posetkit/poset.hpp"

namespace posetkit {

// Line-based text format: '#' comment lines, then "poset <n>", then one
// "<i> < <j>" line per relation with 1-based indices. Blank lines are
// ignored. Throws kParse with the offending line number.
Poset ParsePoset(std::string_view text);

// Writes the cover relations, sorted.
std::string FormatPoset(const Poset& p);

}  // namespace posetkit

#endif  // POSETKIT_POSET_IO_HPP_
