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

// Test-side generators and brute-force checks, independent of the library's
// own enumeration code.

#ifndef POSETKIT_TESTS_SUPPORT_HPP_
#define POSETKIT_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "posetkit/poset.hpp"

namespace posetkit::testing {

// 1-based relation pairs, as written in poset files.
Poset FromOneBased(std::size_t n, std::vector<std::pair<int, int>> relations);

// Six elements, dimension three, seven incomparable pairs.
Poset Chevron();

// B_n as a poset on the 2^n subsets of [n], element index = bitmask.
Poset BooleanLattice(unsigned n);

// new_label[x] is the new index of element x.
Poset Relabel(const Poset& p, const std::vector<ElementId>& new_label);

// One representative per isomorphism class.
std::vector<Poset> PosetsUpToIsomorphism(std::size_t n);

// Every strict order on {0..n-1} whose relations all go upward in index.
std::vector<Poset> NaturallyLabelledPosets(std::size_t n);

// Dominance order of a random permutation, randomly relabelled.
Poset RandomTwoDimensional(std::size_t n, std::mt19937_64& rng);

// Closure of random upward edges, randomly relabelled.
Poset RandomPoset(std::size_t n, double density, std::mt19937_64& rng);

// Antichains by filtering all 2^n subsets.
std::uint64_t BruteAntichainCount(const Poset& p);

// Sum of |A| over all antichains A.
std::uint64_t BruteAntichainIncidences(const Poset& p);

// Linear extensions found by filtering all n! permutations.
std::vector<std::vector<ElementId>> PermutationExtensions(const Poset& p);

// Maximum pairwise reversal count over PermutationExtensions.
std::size_t PermutationDiameter(const Poset& p);

// Whether some orientation of the incomparability graph is transitive,
// by trying all of them.
bool BruteTransitivelyOrientable(const Poset& p);

}  // namespace posetkit::testing

#endif  // POSETKIT_TESTS_SUPPORT_HPP_
