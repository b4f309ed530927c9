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

#include "posetkit/poset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "posetkit/error.hpp"

namespace posetkit {

Poset Poset::FromRelations(std::size_t n, std::span<const Relation> pairs) {
  std::vector<ElementSet> above(n, ElementSet(n));
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) {
      Fail(ErrorCode::kIndexOutOfRange,
           "relation (" + std::to_string(x) + ", " + std::to_string(y) +
               ") outside a poset of size " + std::to_string(n));
    }
    above[x].set(y);
  }
  // Warshall closure on bit rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (above[i].test(k)) above[i] |= above[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (above[i].test(i)) {
      Fail(ErrorCode::kCycleDetected,
           "relations contain a cycle through element " + std::to_string(i));
    }
  }
  return FromClosedUpSets(std::move(above));
}

Poset Poset::FromClosedUpSets(std::vector<ElementSet> above) {
  Poset p;
  const std::size_t n = above.size();
  p.below_.assign(n, ElementSet(n));
  for (std::size_t x = 0; x < n; ++x) {
    above[x].for_each([&](ElementId y) { p.below_[y].set(x); });
  }
  p.above_ = std::move(above);
  assert(p.SatisfiesOrderAxioms());
  return p;
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size()) {
    Fail(ErrorCode::kInvalidArgument, "label count does not match poset size");
  }
  labels_ = std::move(labels);
}

bool Poset::SatisfiesOrderAxioms() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (less(x, x)) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (!less(x, y)) continue;
      if (less(y, x)) return false;
      for (std::size_t z = 0; z < n; ++z) {
        if (less(y, z) && !less(x, z)) return false;
      }
    }
  }
  return true;
}

std::vector<Relation> IncomparablePairs(const Poset& p) {
  std::vector<Relation> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (!p.comparable(x, y)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::size_t IncomparableCount(const Poset& p) {
  std::size_t comparable = 0;
  for (std::size_t x = 0; x < p.size(); ++x) comparable += p.above(x).count();
  const std::size_t n = p.size();
  return n * (n > 0 ? n - 1 : 0) / 2 - comparable;
}

std::vector<Relation> CoverPairs(const Poset& p) {
  std::vector<Relation> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    p.above(x).for_each([&](ElementId y) {
      if (!p.above(x).intersects(p.below(y))) out.emplace_back(x, y);
    });
  }
  return out;
}

InducedPoset Induced(const Poset& p, const ElementSet& subset) {
  if (subset.universe() != p.size()) {
    Fail(ErrorCode::kIndexOutOfRange, "subset universe does not match poset");
  }
  InducedPoset out;
  out.original = subset.members();
  const std::size_t m = out.original.size();
  std::vector<ElementSet> above(m, ElementSet(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (p.less(out.original[a], out.original[b])) above[a].set(b);
    }
  }
  out.poset = Poset::FromClosedUpSets(std::move(above));
  if (!p.labels().empty()) {
    std::vector<std::string> labels;
    for (ElementId x : out.original) labels.push_back(p.labels()[x]);
    out.poset.set_labels(std::move(labels));
  }
  return out;
}

std::vector<std::vector<ElementId>> Components(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x) {
    p.above(x).for_each([&](ElementId y) {
      std::size_t rx = find(x), ry = find(y);
      if (rx != ry) parent[std::max(rx, ry)] = std::min(rx, ry);
    });
  }
  std::vector<std::vector<ElementId>> groups(n);
  for (std::size_t x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<ElementId>> out;
  for (auto& g : groups) {
    if (!g.empty()) out.push_back(std::move(g));
  }
  return out;
}

ElementSet MaxOf(const Poset& p, const ElementSet& subset) {
  ElementSet out(p.size());
  subset.for_each([&](ElementId x) {
    if (!p.above(x).intersects(subset)) out.set(x);
  });
  return out;
}

ElementSet MinOf(const Poset& p, const ElementSet& subset) {
  ElementSet out(p.size());
  subset.for_each([&](ElementId x) {
    if (!p.below(x).intersects(subset)) out.set(x);
  });
  return out;
}

bool IsAntichain(const Poset& p, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElementId x) {
    if (p.above(x).intersects(s)) ok = false;
  });
  return ok;
}

bool IsDownset(const Poset& p, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElementId x) {
    if (!p.below(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

ElementSet DownsetOf(const Poset& p, const ElementSet& antichain) {
  if (antichain.universe() != p.size() || !IsAntichain(p, antichain)) {
    Fail(ErrorCode::kNotAnAntichain, "set is not an antichain of the poset");
  }
  ElementSet out = antichain;
  antichain.for_each([&](ElementId x) { out |= p.below(x); });
  return out;
}

ElementSet MaximaOfDownset(const Poset& p, const ElementSet& downset) {
  if (downset.universe() != p.size() || !IsDownset(p, downset)) {
    Fail(ErrorCode::kNotADownset, "set is not a downset of the poset");
  }
  return MaxOf(p, downset);
}

namespace {

void CollectAntichains(const Poset& p, ElementSet& current, ElementId next,
                       const ElementSet& blocked, std::size_t cap,
                       std::vector<ElementSet>& out) {
  if (out.size() >= cap) {
    Fail(ErrorCode::kCapExceeded,
         "more than " + std::to_string(cap) + " antichains");
  }
  out.push_back(current);
  for (ElementId x = next; x < p.size(); ++x) {
    if (blocked.test(x)) continue;
    ElementSet more = blocked;
    more |= p.above(x);
    more |= p.below(x);
    current.set(x);
    CollectAntichains(p, current, x + 1, more, cap, out);
    current.reset(x);
  }
}

}  // namespace

std::vector<ElementSet> EnumerateAntichains(const Poset& p, std::size_t cap) {
  std::vector<ElementSet> out;
  ElementSet current(p.size());
  CollectAntichains(p, current, 0, ElementSet(p.size()), cap, out);
  return out;
}

std::vector<ElementSet> EnumerateDownsets(const Poset& p, std::size_t cap) {
  std::vector<ElementSet> out;
  for (const auto& a : EnumerateAntichains(p, cap)) {
    ElementSet d = a;
    a.for_each([&](ElementId x) { d |= p.below(x); });
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset AntichainPoset(std::size_t n) { return Poset::FromRelations(n, {}); }

Poset ChainPoset(std::size_t n) {
  std::vector<Relation> covers;
  for (std::size_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return Poset::FromRelations(n, covers);
}

Poset ChainUnion(std::span<const std::size_t> lengths) {
  std::vector<Relation> covers;
  std::size_t n = 0;
  for (std::size_t len : lengths) {
    if (len == 0) Fail(ErrorCode::kInvalidArgument, "chain length must be >= 1");
    for (std::size_t j = 0; j + 1 < len; ++j) covers.emplace_back(n + j, n + j + 1);
    n += len;
  }
  return Poset::FromRelations(n, covers);
}

DownsetLattice BuildDownsetLattice(const Poset& p, std::size_t cap) {
  DownsetLattice lattice;
  lattice.downsets = EnumerateDownsets(p, cap);
  const std::size_t m = lattice.downsets.size();
  std::vector<ElementSet> above(m, ElementSet(m));
  for (std::size_t a = 0; a < m; ++a) {
    lattice.index.emplace(lattice.downsets[a], a);
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && lattice.downsets[a].is_subset_of(lattice.downsets[b])) {
        above[a].set(b);
      }
    }
  }
  lattice.order = Poset::FromClosedUpSets(std::move(above));
  return lattice;
}

}  // namespace posetkit
