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

#include <string>
#include <unordered_map>

#include "posetkit/error.hpp"

namespace posetkit {
namespace {

// P re-indexed by sigma position: element i is x_{i+1}.
class PositionalOrder {
 public:
  PositionalOrder(const Poset& p, const LinearOrder& sigma)
      : n_(p.size()), less_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        less_[i * n_ + j] = p.less(sigma.at(i), sigma.at(j)) ? 1 : 0;
      }
    }
  }

  std::size_t size() const { return n_; }
  bool less(std::size_t i, std::size_t j) const { return less_[i * n_ + j] != 0; }
  bool incomparable(std::size_t i, std::size_t j) const {
    return i != j && !less(i, j) && !less(j, i);
  }

 private:
  std::size_t n_;
  std::vector<unsigned char> less_;
};

void RequireNonSeparating(const Poset& p, const LinearOrder& sigma) {
  if (!IsNonSeparating(p, sigma)) {
    Fail(ErrorCode::kSeparatingExtension,
         "antichain counting needs a non-separating linear extension");
  }
}

// Antichains of the subposet on |positions| (ascending sigma positions),
// empty antichain included. Any subset of a non-separating order is again
// non-separating, so the one-pass recurrence applies.
template <typename Count>
Count CountOnPositions(const PositionalOrder& po,
                       const std::vector<std::size_t>& positions) {
  std::vector<Count> ending(positions.size());
  Count total = 1;
  for (std::size_t a = 0; a < positions.size(); ++a) {
    Count value = 1;
    for (std::size_t b = 0; b < a; ++b) {
      if (po.incomparable(positions[a], positions[b])) value += ending[b];
    }
    ending[a] = value;
    total += value;
  }
  return total;
}

BigCount CountOn(const PositionalOrder& po,
                 const std::vector<std::size_t>& positions) {
  // a(Q) <= 2^|Q|.
  if (positions.size() < 63) {
    return BigCount(CountOnPositions<std::uint64_t>(po, positions));
  }
  return CountOnPositions<BigCount>(po, positions);
}

std::vector<std::size_t> MiddlePositions(const PositionalOrder& po,
                                         std::size_t i, std::size_t k,
                                         std::size_t l) {
  std::vector<std::size_t> out;
  if (i == k || !po.incomparable(i, k)) return out;
  for (std::size_t j = i + 1; j < k; ++j) {
    if (po.less(j, l) && po.incomparable(j, i) && po.incomparable(j, k)) {
      out.push_back(j);
    }
  }
  return out;
}

std::vector<std::size_t> LeftPositions(const PositionalOrder& po, std::size_t i,
                                       std::size_t l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < i; ++x) {
    if (po.incomparable(x, l)) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> RightPositions(const PositionalOrder& po,
                                        std::size_t k, std::size_t l) {
  std::vector<std::size_t> out;
  for (std::size_t x = l + 1; x < po.size(); ++x) {
    if (po.incomparable(x, k)) out.push_back(x);
  }
  return out;
}

InducedPoset InduceByPositions(const Poset& p, const LinearOrder& sigma,
                               const std::vector<std::size_t>& positions) {
  ElementSet s(p.size());
  for (std::size_t pos : positions) s.set(sigma.at(pos));
  return Induced(p, s);
}

}  // namespace

BigCount LedBoolean(unsigned n) {
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "led(B_n) needs n >= 1");
  // 2^(2n-2) - (n+1) 2^(n-2), kept integral by working with four times it.
  BigCount four_led = Pow2(2 * n) - BigCount(n + 1) * Pow2(n);
  return four_led / 4;
}

AntichainCountTable CountAntichains(const Poset& p, const LinearOrder& sigma) {
  RequireNonSeparating(p, sigma);
  const PositionalOrder po(p, sigma);
  const std::size_t n = p.size();
  AntichainCountTable table;
  table.per_position.resize(n);
  table.total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigCount value = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (po.incomparable(i, j)) value += table.per_position[j];
    }
    table.total += value;
    table.per_position[i] = std::move(value);
  }
  return table;
}

BigCount CountAntichains(const Poset& p) {
  return CountAntichains(p, Realizer(p).sigma).total;
}

SizeVectors ComputeSizeVectors(const Poset& p, const LinearOrder& sigma) {
  RequireNonSeparating(p, sigma);
  const PositionalOrder po(p, sigma);
  const std::size_t n = p.size();
  SizeVectors out;
  out.s.assign(n, std::vector<BigCount>(n + 1, BigCount(0)));
  for (std::size_t i = 0; i < n; ++i) {
    out.s[i][1] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (!po.incomparable(i, j)) continue;
      for (std::size_t r = 2; r <= n; ++r) out.s[i][r] += out.s[j][r - 1];
    }
  }
  return out;
}

BigCount Gamma(const Poset& p, const LinearOrder& sigma) {
  const SizeVectors sv = ComputeSizeVectors(p, sigma);
  BigCount incidences = 0;
  for (const auto& row : sv.s) {
    for (std::size_t r = 1; r < row.size(); ++r) incidences += BigCount(r) * row[r];
  }
  // (A, A - x) and (A - x, A).
  return 2 * incidences;
}

RestrictedSubposets ComputeRestrictedSubposets(const Poset& p,
                                               const LinearOrder& sigma,
                                               std::size_t i, std::size_t k,
                                               std::size_t l) {
  const std::size_t n = p.size();
  if (i >= n || k >= n || l >= n) {
    Fail(ErrorCode::kIndexOutOfRange, "sigma position out of range");
  }
  const PositionalOrder po(p, sigma);
  return {InduceByPositions(p, sigma, MiddlePositions(po, i, k, l)),
          InduceByPositions(p, sigma, LeftPositions(po, i, l)),
          InduceByPositions(p, sigma, RightPositions(po, k, l))};
}

DeltaTable::DeltaTable(const Poset& p, const LinearOrder& sigma)
    : n_(p.size()),
      delta1_(n_ * n_, BigCount(0)),
      delta2_(n_ * n_, BigCount(0)),
      right_(n_ * n_, BigCount(0)) {
  RequireNonSeparating(p, sigma);
  const PositionalOrder po(p, sigma);
  const std::size_t n = n_;

  std::vector<BigCount> left(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      left[a * n + b] = CountOn(po, LeftPositions(po, a, b));
      right_[a * n + b] = CountOn(po, RightPositions(po, a, b));
    }
  }

  // peeled[(k' * n + k) * n + l'] = a(R(k', k, l')) for k' < l' < k with
  // x_k || x_k'. Filled for each (k', k) by growing R leftwards, counting
  // antichains by their sigma-smallest element.
  std::unordered_map<std::size_t, std::vector<BigCount>> peeled;
  auto peeled_row = [&](std::size_t kp, std::size_t k) -> const std::vector<BigCount>& {
    auto [it, inserted] = peeled.try_emplace(kp * n + k);
    if (!inserted) return it->second;
    auto& row = it->second;
    row.assign(n, BigCount(0));
    std::vector<std::size_t> members;
    std::vector<BigCount> starting(n);
    BigCount total = 1;
    for (std::size_t lp = k; lp-- > kp + 1;) {
      row[lp] = total;
      // Moving from l' to l' - 1 admits x_{l'} itself.
      const std::size_t j = lp;
      if (po.incomparable(j, kp) && po.incomparable(j, k)) {
        BigCount value = 1;
        for (std::size_t m : members) {
          if (po.incomparable(j, m)) value += starting[m];
        }
        starting[j] = value;
        total += value;
        members.push_back(j);
      }
    }
    return row;
  };

  // delta(k', l') only feeds delta2(k, l) for l' < l, so sweep l upwards.
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t k = 0; k < l; ++k) {
      if (!po.less(k, l)) continue;
      BigCount d1 = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        if (i != k && !po.incomparable(i, k)) continue;
        if (!po.less(i, l)) continue;
        const BigCount& left_weight = left[i * n + l];
        if (i == k) {
          d1 += left_weight;
        } else {
          d1 += CountOn(po, MiddlePositions(po, i, k, l)) * left_weight;
        }
      }
      BigCount d2 = 0;
      for (std::size_t lp = 0; lp < l; ++lp) {
        if (!po.incomparable(lp, l)) continue;
        for (std::size_t kp = 0; kp < lp; ++kp) {
          if (!po.less(kp, lp) || !po.less(kp, l)) continue;
          const std::size_t prev = kp * n + lp;
          if (delta1_[prev] == 0 && delta2_[prev] == 0) continue;
          if (kp == k) {
            d2 += delta1_[prev] + delta2_[prev];
          } else if (k > lp && po.incomparable(k, kp)) {
            d2 += (delta1_[prev] + delta2_[prev]) * peeled_row(kp, k)[lp];
          }
        }
      }
      delta1_[k * n + l] = std::move(d1);
      delta2_[k * n + l] = std::move(d2);
    }
  }
}

BigCount DeltaTable::ConnectedConfigurations() const {
  BigCount total = 0;
  for (std::size_t idx = 0; idx < n_ * n_; ++idx) {
    if (delta1_[idx] == 0 && delta2_[idx] == 0) continue;
    total += (delta1_[idx] + delta2_[idx]) * right_[idx];
  }
  return total;
}

BigCount Delta1(const Poset& p, const LinearOrder& sigma, std::size_t k,
                std::size_t l) {
  if (k >= p.size() || l >= p.size()) {
    Fail(ErrorCode::kIndexOutOfRange, "sigma position out of range");
  }
  return DeltaTable(p, sigma).delta1(k, l);
}

BigCount Delta2(const Poset& p, const LinearOrder& sigma, std::size_t k,
                std::size_t l) {
  if (k >= p.size() || l >= p.size()) {
    Fail(ErrorCode::kIndexOutOfRange, "sigma position out of range");
  }
  return DeltaTable(p, sigma).delta2(k, l);
}

LedBreakdown LedDownset(const Poset& p) { return LedDownset(p, Realizer(p).sigma); }

LedBreakdown LedDownset(const Poset& p, const LinearOrder& sigma) {
  LedBreakdown out;
  const AntichainCountTable counts = CountAntichains(p, sigma);
  const DeltaTable table(p, sigma);
  const std::size_t n = p.size();
  out.sigma = sigma;
  out.alpha = counts.total * counts.total;
  out.beta = counts.total;
  out.gamma = Gamma(p, sigma);
  // The table counts each connected configuration once; (A, B) and (B, A)
  // are distinct ordered pairs.
  out.delta = 2 * table.ConnectedConfigurations();
  out.delta1.resize(n * n);
  out.delta2.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      out.delta1[k * n + l] = table.delta1(k, l);
      out.delta2[k * n + l] = table.delta2(k, l);
    }
  }
  const BigCount numerator = out.alpha - out.beta - out.gamma - out.delta;
  if (numerator < 0 || numerator % 4 != 0) {
    Fail(ErrorCode::kInternal,
         "alpha - beta - gamma - delta = " + ToDecimal(numerator) +
             " is not a nonnegative multiple of 4");
  }
  out.led = numerator / 4;
  return out;
}

namespace {

std::size_t ComponentCount(const Poset& p, const ElementSet& subset) {
  ElementSet unvisited = subset;
  std::size_t count = 0;
  std::vector<ElementId> stack;
  while (!unvisited.empty()) {
    ElementId start = unvisited.members().front();
    unvisited.reset(start);
    stack.push_back(start);
    ++count;
    while (!stack.empty()) {
      ElementId x = stack.back();
      stack.pop_back();
      ElementSet next = (p.above(x) | p.below(x)) & unvisited;
      next.for_each([&](ElementId y) {
        unvisited.reset(y);
        stack.push_back(y);
      });
    }
  }
  return count;
}

}  // namespace

BigCount LedUpperBound(const Poset& p, std::size_t cap) {
  const auto antichains = EnumerateAntichains(p, cap);
  BigCount unordered = 0;
  for (std::size_t a = 0; a < antichains.size(); ++a) {
    for (std::size_t b = a + 1; b < antichains.size(); ++b) {
      const ElementSet d = antichains[a] ^ antichains[b];
      if (d.count() >= 2 && ComponentCount(p, d) >= 2) ++unordered;
    }
  }
  const BigCount ordered = 2 * unordered;
  if (ordered % 4 != 0) {
    Fail(ErrorCode::kInternal, "class sizes are not multiples of 4");
  }
  return ordered / 4;
}

BigCount LedChainUnion(std::span<const std::size_t> lengths) {
  if (lengths.empty()) Fail(ErrorCode::kInvalidArgument, "no chain lengths");
  for (std::size_t len : lengths) {
    if (len == 0) Fail(ErrorCode::kInvalidArgument, "chain length must be >= 1");
  }
  BigCount all = 1;
  for (std::size_t len : lengths) all *= BigCount(len + 1);
  BigCount one_chain = 0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    BigCount term = BigCount(lengths[k] + 1) * BigCount(lengths[k]);
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (i != k) term *= BigCount(lengths[i] + 1);
    }
    one_chain += term;
  }
  const BigCount numerator = all * all - one_chain - all;
  if (numerator % 4 != 0) {
    Fail(ErrorCode::kInternal, "chain-union count is not a multiple of 4");
  }
  return numerator / 4;
}

}  // namespace posetkit
