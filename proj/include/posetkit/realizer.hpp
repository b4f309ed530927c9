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

#ifndef POSETKIT_REALIZER_HPP_
#define POSETKIT_REALIZER_HPP_

#include <cstddef>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit {

// A permutation of {0, ..., n-1}; position 0 holds the smallest element.
class LinearOrder {
 public:
  LinearOrder() = default;
  // Throws kInvalidArgument unless |sequence| is a permutation.
  explicit LinearOrder(std::vector<ElementId> sequence);

  static LinearOrder Identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  ElementId at(std::size_t position) const { return order_[position]; }
  std::size_t position(ElementId x) const { return position_[x]; }
  bool before(ElementId x, ElementId y) const {
    return position_[x] < position_[y];
  }
  const std::vector<ElementId>& sequence() const { return order_; }

  LinearOrder Reversed() const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<ElementId> order_;
  std::vector<std::size_t> position_;
};

bool IsLinearExtension(const Poset& p, const LinearOrder& order);

// Directed edges (x, y) of a transitive orientation of the incomparability
// graph, sorted. Implication classes are explored with Gamma-forcing on the
// shrinking edge set; each class is seeded by the lexicographically least
// unoriented pair, oriented low to high. Throws kNotTwoDimensional.
std::vector<Relation> TransitiveOrientation(const Poset& p);

bool IsTwoDimensional(const Poset& p);

struct Realizer2D {
  LinearOrder sigma;
  LinearOrder sigma_bar;
};

// sigma extends P plus the orientation, sigma_bar extends P plus its reverse.
// Topological sorts break ties by smallest index.
Realizer2D Realizer(const Poset& p);

// True iff no u < v has an x incomparable to both lying strictly between
// them in |order|. Throws kNotALinearExtension.
bool IsNonSeparating(const Poset& p, const LinearOrder& order);

// The unique linear extension that reverses every incomparable pair of
// |order|. It is a linear extension exactly when |order| is non-separating;
// otherwise throws kSeparatingExtension.
LinearOrder RealizerPartner(const Poset& p, const LinearOrder& order);

}  // namespace posetkit

#endif  // POSETKIT_REALIZER_HPP_
