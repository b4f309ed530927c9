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

#ifndef POSETKIT_ORACLE_HPP_
#define POSETKIT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "posetkit/big_count.hpp"
#include "posetkit/poset.hpp"
#include "posetkit/realizer.hpp"
#include "posetkit/revlex.hpp"

namespace posetkit {

// Brute-force ground truth for desk-scale instances.

// Backtracking, always taking the smallest-index available minimal element
// first, so extensions come out in lexicographic order. Returning false from
// |visit| stops the enumeration.
void ForEachLinearExtension(
    const Poset& p,
    const std::function<bool(std::span<const ElementId>)>& visit);

std::vector<LinearOrder> AllLinearExtensions(const Poset& p,
                                             std::size_t cap = kDefaultCap);

// Number of pairs ordered differently by two orders on the same elements.
std::uint64_t CountReversals(const LinearOrder& a, const LinearOrder& b);

enum class DiameterMethod {
  // All-sources BFS over G(P), cross-checked against the maximum pairwise
  // reversal count.
  kBreadthFirst,
  // For every extension L2, a DP over the downsets of P finds the extension
  // L1 with the most reversals against L2.
  kDownsetProgram,
};

struct DiameterOptions {
  std::size_t cap = kDefaultCap;    // bound on the number of extensions
  std::size_t bfs_limit = 1500;     // above this, use kDownsetProgram
  bool collect_pairs = true;
  std::size_t pair_limit = 100000;  // census truncation
};

struct DiameterResult {
  BigCount diameter;
  // Unordered diametral pairs, first < second lexicographically, sorted.
  std::vector<std::pair<LinearOrder, LinearOrder>> pairs;
  std::size_t extension_count = 0;
  DiameterMethod method = DiameterMethod::kBreadthFirst;
  bool census_complete = true;
};

// Diameter of the linear extension graph G(P). When G(P) has a single
// vertex the diameter is 0 and the census is empty. Throws kCapExceeded.
DiameterResult LinearExtensionGraphDiameter(const Poset& p,
                                            const DiameterOptions& options = {});

struct LatticeDiameterResult {
  BigCount led;
  std::vector<std::pair<LatticeExtension, LatticeExtension>> pairs;
  std::size_t lattice_size = 0;
  std::size_t extension_count = 0;
  DiameterMethod method = DiameterMethod::kBreadthFirst;
  bool census_complete = true;
};

// led(D_P) from the explicit downset lattice.
LatticeDiameterResult BruteLedDownset(const Poset& p,
                                      const DiameterOptions& options = {},
                                      std::size_t lattice_cap = 4096);

struct EquivalenceClass {
  ElementSet d;
  ElementSet i;
  // Components of P[D], each sorted, ordered by smallest member.
  std::vector<std::vector<ElementId>> components;
  // pairs[K] = (A_K, B_K) for the component subset with bitmask K.
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  // The generated downsets of each pair.
  std::vector<std::pair<ElementSet, ElementSet>> downset_pairs;

  std::size_t component_count() const { return components.size(); }
};

// Groups every ordered antichain pair by (A xor B, A cap B) and checks the
// grouping against the component-subset bijection. Throws kCapExceeded, or
// kInternal if the bijection fails.
std::vector<EquivalenceClass> EnumerateClasses(const Poset& p,
                                               std::size_t cap = 4096);

// Unordered reversals between two lattice extensions among the class pairs.
BigCount ClassReversals(const EquivalenceClass& c, const LatticeExtension& first,
                        const LatticeExtension& second);

struct KleitmanAudit {
  // family[K] is true iff A_K^down precedes B_K^down.
  std::vector<bool> first;
  std::vector<bool> second;
  std::size_t first_size = 0;
  std::size_t second_size = 0;
  std::size_t intersection_size = 0;
  std::size_t symmetric_difference_size = 0;
  bool first_closed_downwards = false;
  bool second_closed_downwards = false;
  // |F1| * |F2| <= 2^d * |F1 cap F2|
  bool inequality_holds = false;

  bool Holds() const {
    return first_closed_downwards && second_closed_downwards &&
           inequality_holds;
  }
};

KleitmanAudit KleitmanFamilies(const EquivalenceClass& c,
                               const LatticeExtension& first,
                               const LatticeExtension& second);

struct CriticalPair {
  ElementId x;
  ElementId y;
  friend bool operator==(const CriticalPair&, const CriticalPair&) = default;
};

std::vector<CriticalPair> CriticalPairs(const Poset& p);

// True iff every extension in every diametral pair of G(P) reverses some
// critical pair; vacuously true when G(P) has one vertex.
bool IsDiametrallyReversing(const Poset& p, const DiameterOptions& options = {});

}  // namespace posetkit

#endif  // POSETKIT_ORACLE_HPP_
