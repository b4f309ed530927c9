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

#include "posetkit/realizer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <queue>
#include <string>

#include "posetkit/error.hpp"

namespace posetkit {

LinearOrder::LinearOrder(std::vector<ElementId> sequence)
    : order_(std::move(sequence)), position_(order_.size(), order_.size()) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    ElementId x = order_[i];
    if (x >= order_.size() || position_[x] != order_.size()) {
      Fail(ErrorCode::kInvalidArgument, "sequence is not a permutation");
    }
    position_[x] = i;
  }
}

LinearOrder LinearOrder::Identity(std::size_t n) {
  std::vector<ElementId> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = i;
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::Reversed() const {
  return LinearOrder(std::vector<ElementId>(order_.rbegin(), order_.rend()));
}

bool IsLinearExtension(const Poset& p, const LinearOrder& order) {
  if (order.size() != p.size()) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    bool ok = true;
    p.above(x).for_each([&](ElementId y) {
      if (!order.before(x, y)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

namespace {

// Kahn's algorithm on |succ|, smallest available index first. Returns an
// empty vector if the relation has a cycle.
std::vector<ElementId> TopologicalOrder(const std::vector<ElementSet>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& s : succ) s.for_each([&](ElementId y) { ++indegree[y]; });
  std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
  for (std::size_t x = 0; x < n; ++x) {
    if (indegree[x] == 0) ready.push(x);
  }
  std::vector<ElementId> out;
  out.reserve(n);
  while (!ready.empty()) {
    ElementId x = ready.top();
    ready.pop();
    out.push_back(x);
    succ[x].for_each([&](ElementId y) {
      if (--indegree[y] == 0) ready.push(y);
    });
  }
  if (out.size() != n) out.clear();
  return out;
}

}  // namespace

std::vector<Relation> TransitiveOrientation(const Poset& p) {
  const std::size_t n = p.size();
  // Remaining (not yet oriented) edges of the incomparability graph.
  std::vector<ElementSet> remaining(n, ElementSet(n));
  for (const auto& [x, y] : IncomparablePairs(p)) {
    remaining[x].set(y);
    remaining[y].set(x);
  }
  // class_of[x * n + y] = id of the implication class holding x -> y.
  std::vector<std::size_t> class_of(n * n, 0);
  std::vector<Relation> result;
  std::size_t class_id = 0;

  for (ElementId a = 0; a < n; ++a) {
    while (true) {
      // Lexicographically least remaining edge with low end a.
      std::optional<ElementId> b;
      remaining[a].for_each([&](ElementId y) {
        if (!b && y > a) b = y;
      });
      if (!b) break;
      ++class_id;
      std::vector<Relation> members;
      std::deque<Relation> queue;
      auto force = [&](ElementId u, ElementId v) {
        if (class_of[v * n + u] == class_id) {
          Fail(ErrorCode::kNotTwoDimensional,
               "incomparability graph is not transitively orientable");
        }
        if (class_of[u * n + v] != class_id) {
          class_of[u * n + v] = class_id;
          members.emplace_back(u, v);
          queue.emplace_back(u, v);
        }
      };
      force(a, *b);
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        // xy forces xc when yc is not an edge, and cy when xc is not an edge.
        remaining[x].for_each([&](ElementId c) {
          if (c != y && !remaining[y].test(c)) force(x, c);
        });
        remaining[y].for_each([&](ElementId c) {
          if (c != x && !remaining[x].test(c)) force(c, y);
        });
      }
      for (const auto& [u, v] : members) {
        remaining[u].reset(v);
        remaining[v].reset(u);
        result.emplace_back(u, v);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool IsTwoDimensional(const Poset& p) {
  try {
    TransitiveOrientation(p);
    return true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotTwoDimensional) throw;
    return false;
  }
}

Realizer2D Realizer(const Poset& p) {
  const std::size_t n = p.size();
  const auto orientation = TransitiveOrientation(p);
  std::vector<ElementSet> forward(n), backward(n);
  for (std::size_t x = 0; x < n; ++x) forward[x] = backward[x] = p.above(x);
  for (const auto& [x, y] : orientation) {
    forward[x].set(y);
    backward[y].set(x);
  }
  auto sigma = TopologicalOrder(forward);
  auto sigma_bar = TopologicalOrder(backward);
  if (sigma.size() != n || sigma_bar.size() != n) {
    Fail(ErrorCode::kInternal, "orientation does not extend to a linear order");
  }
  Realizer2D r{LinearOrder(std::move(sigma)), LinearOrder(std::move(sigma_bar))};
  for (const auto& [x, y] : IncomparablePairs(p)) {
    if (r.sigma.before(x, y) == r.sigma_bar.before(x, y)) {
      Fail(ErrorCode::kInternal, "realizer does not reverse an incomparable pair");
    }
  }
  return r;
}

bool IsNonSeparating(const Poset& p, const LinearOrder& order) {
  if (!IsLinearExtension(p, order)) {
    Fail(ErrorCode::kNotALinearExtension, "order is not a linear extension");
  }
  const std::size_t n = p.size();
  for (std::size_t pu = 0; pu < n; ++pu) {
    const ElementId u = order.at(pu);
    for (std::size_t pv = pu + 1; pv < n; ++pv) {
      const ElementId v = order.at(pv);
      if (!p.less(u, v)) continue;
      for (std::size_t px = pu + 1; px < pv; ++px) {
        const ElementId x = order.at(px);
        if (!p.comparable(x, u) && !p.comparable(x, v)) return false;
      }
    }
  }
  return true;
}

LinearOrder RealizerPartner(const Poset& p, const LinearOrder& order) {
  if (!IsNonSeparating(p, order)) {
    Fail(ErrorCode::kSeparatingExtension, "order is separating");
  }
  const std::size_t n = p.size();
  std::vector<ElementSet> succ(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.less(x, y) || (p.incomparable(x, y) && order.before(y, x))) {
        succ[x].set(y);
      }
    }
  }
  auto partner = TopologicalOrder(succ);
  if (partner.size() != n) {
    Fail(ErrorCode::kSeparatingExtension, "order has no realizer partner");
  }
  return LinearOrder(std::move(partner));
}

}  // namespace posetkit
