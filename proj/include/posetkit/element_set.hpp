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

#ifndef POSETKIT_ELEMENT_SET_HPP_
#define POSETKIT_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace posetkit {

using ElementId = std::size_t;

// Fixed-universe bit set over the elements {0, ..., universe-1}.
//
// Ordering compares the sets as binary numbers (bit i has weight 2^i), which
// is the deterministic order used for every enumeration of downsets.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members);
  ElementSet(std::size_t universe, std::span<const ElementId> members);

  static ElementSet Full(std::size_t universe);

  std::size_t universe() const { return universe_; }

  bool test(ElementId x) const { return (words_[x / 64] >> (x % 64)) & 1u; }
  void set(ElementId x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  void reset(ElementId x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator^=(const ElementSet& other);
  // Set difference.
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator^(ElementSet a, const ElementSet& b) { return a ^= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a,
                                          const ElementSet& b);

  std::vector<ElementId> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<ElementId>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace posetkit

#endif  // POSETKIT_ELEMENT_SET_HPP_
