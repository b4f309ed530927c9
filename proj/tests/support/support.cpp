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

#include "support.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace posetkit::testing {

Poset FromOneBased(std::size_t n, std::vector<std::pair<int, int>> relations) {
  std::vector<Relation> zero_based;
  for (auto [a, b] : relations) {
    zero_based.emplace_back(static_cast<ElementId>(a - 1),
                            static_cast<ElementId>(b - 1));
  }
  return Poset::FromRelations(n, zero_based);
}

Poset Chevron() {
  return FromOneBased(6, {{1, 4}, {4, 5}, {2, 3}, {3, 5}, {1, 6}, {2, 6}});
}

Poset BooleanLattice(unsigned n) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<Relation> relations;
  for (std::size_t s = 0; s < size; ++s) {
    for (std::size_t t = 0; t < size; ++t) {
      if (s != t && (s & t) == s) relations.emplace_back(s, t);
    }
  }
  return Poset::FromRelations(size, relations);
}

Poset Relabel(const Poset& p, const std::vector<ElementId>& new_label) {
  std::vector<Relation> relations;
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y = 0; y < p.size(); ++y) {
      if (p.less(x, y)) relations.emplace_back(new_label[x], new_label[y]);
    }
  }
  return Poset::FromRelations(p.size(), relations);
}

namespace {

using Mask = std::uint64_t;

Mask RelationMask(const Poset& p, const std::vector<ElementId>& perm) {
  const std::size_t n = p.size();
  Mask m = 0;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (p.less(x, y)) m |= Mask{1} << (perm[x] * n + perm[y]);
    }
  }
  return m;
}

bool Closed(const std::vector<std::vector<bool>>& less) {
  const std::size_t n = less.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!less[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (less[b][c] && !less[a][c]) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Poset> NaturallyLabelledPosets(std::size_t n) {
  std::vector<std::pair<ElementId, ElementId>> slots;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<Poset> out;
  for (Mask m = 0; m < (Mask{1} << slots.size()); ++m) {
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    std::vector<Relation> relations;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (m >> s & 1) {
        less[slots[s].first][slots[s].second] = true;
        relations.push_back(slots[s]);
      }
    }
    if (Closed(less)) out.push_back(Poset::FromRelations(n, relations));
  }
  return out;
}

std::vector<Poset> PosetsUpToIsomorphism(std::size_t n) {
  std::vector<Poset> out;
  std::set<Mask> seen;
  for (const Poset& p : NaturallyLabelledPosets(n)) {
    std::vector<ElementId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Mask canonical = ~Mask{0};
    do {
      canonical = std::min(canonical, RelationMask(p, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canonical).second) out.push_back(p);
  }
  return out;
}

Poset RandomTwoDimensional(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<Relation> relations;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (pi[a] < pi[b]) relations.emplace_back(a, b);
    }
  }
  std::vector<ElementId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  return Relabel(Poset::FromRelations(n, relations), label);
}

Poset RandomPoset(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(density);
  std::vector<Relation> relations;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a + 1; b < n; ++b) {
      if (edge(rng)) relations.emplace_back(a, b);
    }
  }
  std::vector<ElementId> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  return Relabel(Poset::FromRelations(n, relations), label);
}

namespace {

template <typename F>
void ForEachAntichainMask(const Poset& p, F&& visit) {
  const std::size_t n = p.size();
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x) {
      if (!(m >> x & 1)) continue;
      for (ElementId y = 0; y < n && ok; ++y) {
        if ((m >> y & 1) && p.less(x, y)) ok = false;
      }
    }
    if (ok) visit(m);
  }
}

}  // namespace

std::uint64_t BruteAntichainCount(const Poset& p) {
  std::uint64_t count = 0;
  ForEachAntichainMask(p, [&](Mask) { ++count; });
  return count;
}

std::uint64_t BruteAntichainIncidences(const Poset& p) {
  std::uint64_t total = 0;
  ForEachAntichainMask(p, [&](Mask m) { total += std::popcount(m); });
  return total;
}

std::vector<std::vector<ElementId>> PermutationExtensions(const Poset& p) {
  std::vector<ElementId> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<ElementId>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j) {
        if (p.less(perm[j], perm[i])) ok = false;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t PermutationDiameter(const Poset& p) {
  const auto exts = PermutationExtensions(p);
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> pos(exts.size(), std::vector<std::size_t>(n));
  for (std::size_t e = 0; e < exts.size(); ++e) {
    for (std::size_t i = 0; i < n; ++i) pos[e][exts[e][i]] = i;
  }
  std::size_t best = 0;
  for (std::size_t a = 0; a < exts.size(); ++a) {
    for (std::size_t b = a + 1; b < exts.size(); ++b) {
      std::size_t reversed = 0;
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = x + 1; y < n; ++y) {
          if ((pos[a][x] < pos[a][y]) != (pos[b][x] < pos[b][y])) ++reversed;
        }
      }
      best = std::max(best, reversed);
    }
  }
  return best;
}

bool BruteTransitivelyOrientable(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<Relation> edges;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = x + 1; y < n; ++y) {
      if (p.incomparable(x, y)) edges.emplace_back(x, y);
    }
  }
  for (Mask m = 0; m < (Mask{1} << edges.size()); ++m) {
    std::vector<std::vector<bool>> t(n, std::vector<bool>(n, false));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [x, y] = edges[e];
      if (m >> e & 1) {
        t[y][x] = true;
      } else {
        t[x][y] = true;
      }
    }
    if (Closed(t)) return true;
  }
  return false;
}

}  // namespace posetkit::testing
