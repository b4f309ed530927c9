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

#ifndef POSETKIT_LED_HPP_
#define POSETKIT_LED_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "posetkit/big_count.hpp"
#include "posetkit/poset.hpp"
#include "posetkit/realizer.hpp"

namespace posetkit {

// Throughout this header, x_1 ... x_n are the elements in the order of a
// non-separating linear extension sigma, and indices i, k, l are 0-based
// sigma positions. Functions taking sigma throw kSeparatingExtension when it
// is separating.

// Linear extension diameter of the Boolean lattice B_n (n >= 1).
BigCount LedBoolean(unsigned n);

struct AntichainCountTable {
  // per_position[i] = number of antichains whose sigma-largest element is x_i.
  std::vector<BigCount> per_position;
  // All antichains, the empty one included.
  BigCount total;
};

AntichainCountTable CountAntichains(const Poset& p, const LinearOrder& sigma);
// Uses the realizer's sigma. Throws kNotTwoDimensional.
BigCount CountAntichains(const Poset& p);

// s[i][r] = number of r-element antichains whose sigma-largest element is
// x_i, for r in 0..n (s[i][0] is always 0).
struct SizeVectors {
  std::vector<std::vector<BigCount>> s;
};

SizeVectors ComputeSizeVectors(const Poset& p, const LinearOrder& sigma);

// Ordered antichain pairs (A, B) with |A xor B| = 1.
BigCount Gamma(const Poset& p, const LinearOrder& sigma);

struct RestrictedSubposets {
  InducedPoset middle;  // x_j in (x_i, x_k), x_j < x_l, {x_i, x_j, x_k} antichain
  InducedPoset left;    // x in [x_1, x_i), x || x_l
  InducedPoset right;   // x in (x_l, x_n], x || x_k
};

// Induced subposets are labelled by original element ids. Throws
// kIndexOutOfRange.
RestrictedSubposets ComputeRestrictedSubposets(const Poset& p,
                                               const LinearOrder& sigma,
                                               std::size_t i, std::size_t k,
                                               std::size_t l);

// Counts of configurations (D, I_left) with P[D] connected, |D| > 1,
// max_sigma Min(D) = x_k, max_sigma Max(D) = x_l and no part of I = A cap B
// to the right of D. delta1 covers a single maximum, delta2 several.
//
// delta2 peels off x_l together with the minima that lie below x_l but not
// below the second-largest maximum x_l'. The remaining configuration ends in
// (k', l') where x_k' is the sigma-largest minimum below x_l', which must
// also lie below x_l. The peeled minima lie in (x_l', x_k], so their count
// is a(R(k', k, l')) with R = {x_j in (x_l', x_k) : {x_k', x_j, x_k}
// antichain}, or 1 when k' = k.
class DeltaTable {
 public:
  DeltaTable(const Poset& p, const LinearOrder& sigma);

  std::size_t size() const { return n_; }
  const BigCount& delta1(std::size_t k, std::size_t l) const {
    return delta1_[k * n_ + l];
  }
  const BigCount& delta2(std::size_t k, std::size_t l) const {
    return delta2_[k * n_ + l];
  }
  // a(P^right_{k,l}), the number of choices for the right part of I.
  const BigCount& right_weight(std::size_t k, std::size_t l) const {
    return right_[k * n_ + l];
  }

  // Sum over (k, l) of (delta1 + delta2) * right_weight: the number of
  // unordered {A, B} with P[A xor B] connected and |A xor B| > 1.
  BigCount ConnectedConfigurations() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigCount> delta1_;
  std::vector<BigCount> delta2_;
  std::vector<BigCount> right_;
};

BigCount Delta1(const Poset& p, const LinearOrder& sigma, std::size_t k,
                std::size_t l);
BigCount Delta2(const Poset& p, const LinearOrder& sigma, std::size_t k,
                std::size_t l);

struct LedBreakdown {
  LinearOrder sigma;
  BigCount alpha;  // all ordered antichain pairs
  BigCount beta;   // pairs with A == B
  BigCount gamma;  // pairs with |A xor B| == 1
  BigCount delta;  // ordered pairs with |A xor B| > 1 and P[A xor B] connected
  // Row-major n x n tables indexed by sigma positions (k, l).
  std::vector<BigCount> delta1;
  std::vector<BigCount> delta2;
  BigCount led;
};

// Linear extension diameter of D_P for 2-dimensional P, in O(n^5).
// Throws kNotTwoDimensional.
LedBreakdown LedDownset(const Poset& p);
LedBreakdown LedDownset(const Poset& p, const LinearOrder& sigma);

// A quarter of the number of antichain pairs whose symmetric difference
// induces at least two components: the exact value for 2-dimensional P and an
// upper bound otherwise. Enumerates antichains; throws kCapExceeded.
BigCount LedUpperBound(const Poset& p, std::size_t cap = kDefaultCap);

// Closed form for P a disjoint union of chains with the given lengths.
BigCount LedChainUnion(std::span<const std::size_t> lengths);

}  // namespace posetkit

#endif  // POSETKIT_LED_HPP_
