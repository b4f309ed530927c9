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

#include "posetkit/poset_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "posetkit/error.hpp"

namespace posetkit {
namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::size_t> ParseIndex(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

[[noreturn]] void ParseFail(std::size_t line, const std::string& what) {
  Fail(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Poset ParsePoset(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Relation> pairs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = Trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!n) {
      auto tokens = Tokens(line);
      if (tokens.size() != 2 || tokens[0] != "poset") {
        ParseFail(line_no, "expected header 'poset <n>'");
      }
      n = ParseIndex(tokens[1]);
      if (!n) ParseFail(line_no, "bad element count");
      continue;
    }
    const auto lt = line.find('<');
    if (lt == std::string_view::npos || line.find('<', lt + 1) != std::string_view::npos) {
      ParseFail(line_no, "expected '<i> < <j>'");
    }
    auto i = ParseIndex(Trim(line.substr(0, lt)));
    auto j = ParseIndex(Trim(line.substr(lt + 1)));
    if (!i || !j) ParseFail(line_no, "bad element index");
    if (*i < 1 || *i > *n || *j < 1 || *j > *n) {
      ParseFail(line_no, "element index out of range 1.." + std::to_string(*n));
    }
    pairs.emplace_back(*i - 1, *j - 1);
  }
  if (!n) Fail(ErrorCode::kParse, "missing 'poset <n>' header");
  try {
    return Poset::FromRelations(*n, pairs);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCycleDetected) {
      Fail(ErrorCode::kCycleDetected, "relations contain a cycle");
    }
    Fail(ErrorCode::kParse, e.what());
  }
}

std::string FormatPoset(const Poset& p) {
  std::ostringstream out;
  out << "poset " << p.size() << '\n';
  for (const auto& [x, y] : CoverPairs(p)) {
    out << x + 1 << " < " << y + 1 << '\n';
  }
  return out.str();
}

}  // namespace posetkit
