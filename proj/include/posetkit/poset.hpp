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

#ifndef POSETKIT_POSET_HPP_
#define POSETKIT_POSET_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetkit/element_set.hpp"

namespace posetkit {

// Default bound on materialized antichain and downset families.
inline constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

using Relation = std::pair<ElementId, ElementId>;

// Finite strict partial order on {0, ..., n-1}, stored as a transitively
// closed relation: one up-set row and one down-set row per element.
class Poset {
 public:
  Poset() = default;

  // Takes the transitive closure of |pairs| (each (x, y) meaning x < y).
  // Throws kIndexOutOfRange or kCycleDetected.
  static Poset FromRelations(std::size_t n, std::span<const Relation> pairs);

  // |above[x]| must already be the strict up-set of x in a closed relation.
  // Only the order axioms are checked, in debug builds.
  static Poset FromClosedUpSets(std::vector<ElementSet> above);

  std::size_t size() const { return above_.size(); }

  bool less(ElementId x, ElementId y) const { return above_[x].test(y); }
  bool comparable(ElementId x, ElementId y) const {
    return less(x, y) || less(y, x);
  }
  bool incomparable(ElementId x, ElementId y) const {
    return x != y && !comparable(x, y);
  }

  const ElementSet& above(ElementId x) const { return above_[x]; }
  const ElementSet& below(ElementId x) const { return below_[x]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::Full(size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Irreflexivity, antisymmetry and transitivity by exhaustive scan.
  bool SatisfiesOrderAxioms() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.above_ == b.above_;
  }

 private:
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
  std::vector<std::string> labels_;
};

std::vector<Relation> IncomparablePairs(const Poset& p);
std::size_t IncomparableCount(const Poset& p);

// Cover relations (x, y): x < y with nothing strictly between.
std::vector<Relation> CoverPairs(const Poset& p);

struct InducedPoset {
  Poset poset;
  // original[i] is the element of the ambient poset that became element i.
  std::vector<ElementId> original;
};

InducedPoset Induced(const Poset& p, const ElementSet& subset);

// Connected components of the comparability graph, each sorted, ordered by
// smallest member.
std::vector<std::vector<ElementId>> Components(const Poset& p);

ElementSet MaxOf(const Poset& p, const ElementSet& subset);
ElementSet MinOf(const Poset& p, const ElementSet& subset);

bool IsAntichain(const Poset& p, const ElementSet& s);
bool IsDownset(const Poset& p, const ElementSet& s);

// Canonical bijection between antichains and downsets. Both throw
// (kNotAnAntichain / kNotADownset) on invalid input.
ElementSet DownsetOf(const Poset& p, const ElementSet& antichain);
ElementSet MaximaOfDownset(const Poset& p, const ElementSet& downset);

// All antichains including the empty one, in lexicographic order of their
// sorted member lists. Throws kCapExceeded once more than |cap| are found.
std::vector<ElementSet> EnumerateAntichains(const Poset& p,
                                            std::size_t cap = kDefaultCap);

// All downsets sorted by numeric bit-pattern value.
std::vector<ElementSet> EnumerateDownsets(const Poset& p,
                                          std::size_t cap = kDefaultCap);

Poset AntichainPoset(std::size_t n);
Poset ChainPoset(std::size_t n);
// Disjoint union of chains; chain i occupies a contiguous index block.
Poset ChainUnion(std::span<const std::size_t> lengths);

struct DownsetLattice {
  // Sorted by numeric bit-pattern value; element i of |order| is downsets[i].
  std::vector<ElementSet> downsets;
  Poset order;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
};

// Explicit inclusion order on all downsets. Quadratic in the lattice size,
// meant for oracle-scale inputs.
DownsetLattice BuildDownsetLattice(const Poset& p,
                                   std::size_t cap = kDefaultCap);

}  // namespace posetkit

#endif  // POSETKIT_POSET_HPP_
