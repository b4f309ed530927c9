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

#ifndef POSETKIT_REVLEX_HPP_
#define POSETKIT_REVLEX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "posetkit/big_count.hpp"
#include "posetkit/poset.hpp"
#include "posetkit/realizer.hpp"

namespace posetkit {

// S <_sigma T iff the sigma-largest element of the symmetric difference lies
// in T. Throws kEqualSets when S == T.
bool RevlexLess(const LinearOrder& sigma, const ElementSet& s,
                const ElementSet& t);

// A linear order on a family of downsets (a linear extension of D_P when the
// family is all of D_P). Position 0 is the smallest downset.
class LatticeExtension {
 public:
  LatticeExtension() = default;
  // Throws kInvalidArgument on duplicate entries.
  explicit LatticeExtension(std::vector<ElementSet> order);

  std::size_t size() const { return order_.size(); }
  const ElementSet& at(std::size_t position) const { return order_[position]; }
  std::optional<std::size_t> position(const ElementSet& s) const;
  const std::vector<ElementSet>& sequence() const { return order_; }

  // Same downset family, regardless of order.
  bool SameGroundSet(const LatticeExtension& other) const;

  friend bool operator==(const LatticeExtension& a, const LatticeExtension& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<ElementSet> order_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> position_;
};

// Contains every downset of |p| exactly once and never places a downset
// after one of its proper supersets.
bool IsDownsetLatticeExtension(const Poset& p, const LatticeExtension& ext,
                               std::size_t cap = kDefaultCap);

// L_sigma: all downsets of |p| in sigma-revlex order. Throws
// kNotALinearExtension or kCapExceeded.
LatticeExtension BuildRevlexExtension(const Poset& p, const LinearOrder& sigma,
                                      std::size_t cap = kDefaultCap);

// Number of unordered pairs ordered oppositely. Throws kMismatchedGroundSets.
BigCount ReversalDistance(const LatticeExtension& first,
                          const LatticeExtension& second);

struct DiametralPair {
  Realizer2D realizer;
  LatticeExtension first;   // L_sigma
  LatticeExtension second;  // L_sigma_bar
};

// Throws kNotTwoDimensional or kCapExceeded.
DiametralPair BuildDiametralPair(const Poset& p, std::size_t cap = kDefaultCap);

struct DominancePoint {
  ElementSet downset;
  std::size_t x;  // 1-based rank in the first extension
  std::size_t y;  // 1-based rank in the second extension
};

// One point per downset, listed in the order of |first|.
std::vector<DominancePoint> DominanceCoordinates(const LatticeExtension& first,
                                                 const LatticeExtension& second);

// SVG drawing with one point per downset at its dominance coordinates and
// one segment per cover relation of D_P. Coordinates in the document are the
// ranks themselves; |scale| pixels per unit is applied by a group transform.
std::string RenderDominanceSvg(const Poset& p, const LatticeExtension& first,
                               const LatticeExtension& second,
                               double scale = 24.0);

}  // namespace posetkit

#endif  // POSETKIT_REVLEX_HPP_
