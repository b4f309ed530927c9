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

#include "posetkit/led.hpp"

#include <random>
#include <vector>

#include "doctest.h"
#include "posetkit/error.hpp"
#include "posetkit/oracle.hpp"
#include "support.hpp"

namespace posetkit {
namespace {

using testing::BruteAntichainCount;
using testing::BruteAntichainIncidences;
using testing::FromOneBased;

// B_4 has 1680384 linear extensions, above the default cap.
BigCount BruteLed(const Poset& p) {
  DiameterOptions options;
  options.cap = std::size_t{1} << 21;
  options.collect_pairs = false;
  return BruteLedDownset(p, options).led;
}

// The delta2 recurrence read literally: every k' below both l' and l
// contributes, weighted by a(P_{k',k,l}).
BigCount LiteralDeltaSum(const Poset& p, const LinearOrder& sigma,
                         bool only_smallest) {
  const std::size_t n = p.size();
  auto lt = [&](std::size_t i, std::size_t j) {
    return p.less(sigma.at(i), sigma.at(j));
  };
  auto inc = [&](std::size_t i, std::size_t j) {
    return i != j && p.incomparable(sigma.at(i), sigma.at(j));
  };
  const DeltaTable table(p, sigma);
  std::vector<BigCount> d2(n * n, BigCount(0));
  BigCount total = 0;
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < l; ++k) {
      if (!lt(k, l)) continue;
      BigCount sum = 0;
      for (std::size_t lp = 0; lp < l; ++lp) {
        if (!inc(lp, l)) continue;
        for (std::size_t kp = 0; kp < lp; ++kp) {
          if (!lt(kp, lp) || !lt(kp, l)) continue;
          const auto middle = ComputeRestrictedSubposets(p, sigma, kp, k, l).middle;
          sum += (table.delta1(kp, lp) + d2[kp * n + lp]) *
                 BruteAntichainCount(middle.poset);
          if (only_smallest) break;
        }
      }
      d2[k * n + l] = sum;
      total += (table.delta1(k, l) + sum) * table.right_weight(k, l);
    }
  }
  return total;
}

TEST_CASE("led of Boolean lattices") {
  CHECK(LedBoolean(1) == 0);
  CHECK(LedBoolean(2) == 1);
  CHECK(LedBoolean(3) == 8);
  CHECK(LedBoolean(4) == 44);
  CHECK(LedBoolean(5) == 208);
  for (unsigned n = 2; n <= 64; ++n) {
    CHECK(LedBoolean(n) == Pow2(2 * n - 2) - BigCount(n + 1) * Pow2(n - 2));
  }
  CHECK_THROWS_AS(LedBoolean(0), Error);
}

TEST_CASE("antichain counts match closed forms and brute force") {
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(CountAntichains(AntichainPoset(n)) == Pow2(n));
    CHECK(CountAntichains(ChainPoset(n)) == n + 1);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Poset p = testing::RandomTwoDimensional(1 + trial % 8, rng);
    const Realizer2D r = Realizer(p);
    const auto a = CountAntichains(p, r.sigma);
    CHECK(a.total == BruteAntichainCount(p));
    CHECK(CountAntichains(p, r.sigma_bar).total == a.total);
    BigCount sum = 1;
    for (const auto& v : a.per_position) sum += v;
    CHECK(sum == a.total);
  }
}

TEST_CASE("antichain counting rejects separating extensions") {
  // u < v with x incomparable to both, x placed between them.
  const Poset p = FromOneBased(3, {{1, 3}});
  const LinearOrder separating({0, 1, 2});
  CHECK_THROWS_AS(CountAntichains(p, separating), Error);
  try {
    CountAntichains(p, separating);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSeparatingExtension);
  }
}

TEST_CASE("size vectors") {
  const Poset a3 = AntichainPoset(3);
  const auto sv = ComputeSizeVectors(a3, LinearOrder::Identity(3));
  CHECK(sv.s[2][2] == 2);
  CHECK(sv.s[2][3] == 1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(sv.s[i][1] == 1);

  const Poset c4 = ChainPoset(4);
  const auto chain = ComputeSizeVectors(c4, LinearOrder::Identity(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t r = 2; r <= 4; ++r) CHECK(chain.s[i][r] == 0);
  }

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Poset p = testing::RandomTwoDimensional(1 + trial % 8, rng);
    const LinearOrder sigma = Realizer(p).sigma;
    const auto s = ComputeSizeVectors(p, sigma);
    const auto a = CountAntichains(p, sigma);
    BigCount incidences = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      BigCount row = 0;
      for (std::size_t r = 1; r <= p.size(); ++r) {
        row += s.s[i][r];
        incidences += BigCount(r) * s.s[i][r];
      }
      CHECK(row == a.per_position[i]);
    }
    CHECK(incidences == BruteAntichainIncidences(p));
    CHECK(Gamma(p, sigma) == 2 * incidences);
  }
}

TEST_CASE("gamma on small cases") {
  CHECK(Gamma(AntichainPoset(2), LinearOrder::Identity(2)) == 8);
  CHECK(Gamma(ChainPoset(2), LinearOrder::Identity(2)) == 4);
  CHECK(Gamma(AntichainPoset(0), LinearOrder::Identity(0)) == 0);
}

TEST_CASE("restricted subposets") {
  const Poset c2 = ChainPoset(2);
  const auto parts = ComputeRestrictedSubposets(c2, LinearOrder::Identity(2), 0, 0, 1);
  CHECK(parts.middle.poset.size() == 0);
  CHECK(parts.left.poset.size() == 0);
  CHECK(parts.right.poset.size() == 0);

  const auto a3 = ComputeRestrictedSubposets(AntichainPoset(3),
                                             LinearOrder::Identity(3), 0, 0, 1);
  REQUIRE(a3.right.original.size() == 1);
  CHECK(a3.right.original[0] == 2);

  CHECK_THROWS_AS(ComputeRestrictedSubposets(c2, LinearOrder::Identity(2), 0, 0, 2),
                  Error);
}

TEST_CASE("delta tables on small cases") {
  const Poset c2 = ChainPoset(2);
  const LinearOrder id2 = LinearOrder::Identity(2);
  CHECK(Delta1(c2, id2, 0, 1) == 1);
  CHECK(Delta2(c2, id2, 0, 1) == 0);

  const Poset a4 = AntichainPoset(4);
  const DeltaTable table(a4, LinearOrder::Identity(4));
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t l = 0; l < 4; ++l) {
      CHECK(table.delta1(k, l) == 0);
      CHECK(table.delta2(k, l) == 0);
    }
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Poset p = testing::RandomTwoDimensional(2 + trial % 7, rng);
    const LinearOrder sigma = Realizer(p).sigma;
    const DeltaTable t(p, sigma);
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (std::size_t l = 0; l < p.size(); ++l) {
        if (p.less(sigma.at(k), sigma.at(l))) continue;
        CHECK(t.delta1(k, l) == 0);
        CHECK(t.delta2(k, l) == 0);
      }
    }
  }
}

TEST_CASE("breakdown of the 2-chain") {
  const LedBreakdown b = LedDownset(ChainPoset(2));
  CHECK(b.alpha == 9);
  CHECK(b.beta == 3);
  CHECK(b.gamma == 4);
  CHECK(b.delta == 2);
  CHECK(b.led == 0);
}

TEST_CASE("led of antichains equals led of Boolean lattices") {
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(LedDownset(AntichainPoset(n)).led == LedBoolean(n));
  }
}

TEST_CASE("led agrees with the oracle on every small 2-dimensional poset") {
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const Poset& p : testing::PosetsUpToIsomorphism(n)) {
      REQUIRE(IsTwoDimensional(p));
      CHECK(LedDownset(p).led == BruteLed(p));
    }
  }
}

TEST_CASE("led agrees with the oracle on random 2-dimensional posets") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    const Poset p = testing::RandomTwoDimensional(5 + trial % 4, rng);
    if (EnumerateDownsets(p).size() > 16) continue;
    CHECK(LedDownset(p).led == BruteLed(p));
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("led equals the quarter count on every 2-dimensional order of six") {
  int checked = 0;
  for (const Poset& p : testing::NaturallyLabelledPosets(6)) {
    if (!IsTwoDimensional(p)) continue;
    CHECK(LedDownset(p).led == LedUpperBound(p));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("crown K_{2,2} separates the readings of delta2") {
  // y1, y2 < m1, m2.
  const Poset crown = FromOneBased(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  const LinearOrder sigma = Realizer(crown).sigma;
  const LedBreakdown b = LedDownset(crown, sigma);
  const BigCount brute = BruteLed(crown);
  CHECK(b.led == brute);

  const BigCount base = b.alpha - b.beta - b.gamma;
  const BigCount all_kprime = base - 2 * LiteralDeltaSum(crown, sigma, false);
  const BigCount smallest_kprime = base - 2 * LiteralDeltaSum(crown, sigma, true);
  CHECK(all_kprime != 4 * brute);
  CHECK(smallest_kprime != 4 * brute);
}

TEST_CASE("led is invariant under relabelling and realizer swap") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Poset p = testing::RandomTwoDimensional(3 + trial % 9, rng);
    const Realizer2D r = Realizer(p);
    const BigCount led = LedDownset(p, r.sigma).led;
    CHECK(LedDownset(p, r.sigma_bar).led == led);
    std::vector<ElementId> label(p.size());
    for (std::size_t i = 0; i < label.size(); ++i) label[i] = label.size() - 1 - i;
    CHECK(LedDownset(testing::Relabel(p, label)).led == led);
  }
}

TEST_CASE("led is rejected for dimension three") {
  try {
    LedDownset(testing::Chevron());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotTwoDimensional);
  }
}

TEST_CASE("upper bound is tight in dimension two") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Poset p = testing::RandomTwoDimensional(1 + trial % 8, rng);
    CHECK(LedUpperBound(p) == LedDownset(p).led);
  }
  CHECK(LedUpperBound(testing::Chevron()) >= BruteLed(testing::Chevron()));
}

TEST_CASE("chain unions") {
  CHECK(LedChainUnion(std::vector<std::size_t>{5}) == 0);
  CHECK(LedChainUnion(std::vector<std::size_t>{1, 1}) == 1);
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(LedChainUnion(std::vector<std::size_t>(n, 1)) == LedBoolean(n));
  }
  CHECK_THROWS_AS(LedChainUnion(std::vector<std::size_t>{}), Error);
  CHECK_THROWS_AS(LedChainUnion(std::vector<std::size_t>{2, 0}), Error);
  const std::vector<std::vector<std::size_t>> shapes = {
      {2, 1}, {2, 2}, {3, 1, 1}, {4, 3}, {2, 2, 2}, {6, 5, 1}};
  for (const auto& shape : shapes) {
    CHECK(LedChainUnion(shape) == LedDownset(ChainUnion(shape)).led);
  }
  CHECK(LedChainUnion(std::vector<std::size_t>{2, 1}) == BruteLed(ChainUnion(std::vector<std::size_t>{2, 1})));
}

}  // namespace
}  // namespace posetkit
