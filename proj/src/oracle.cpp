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

#include "posetkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "posetkit/error.hpp"

namespace posetkit {
namespace {

void Backtrack(const Poset& p, std::vector<std::size_t>& pending,
               std::vector<bool>& placed, std::vector<ElementId>& prefix,
               const std::function<bool(std::span<const ElementId>)>& visit,
               bool& stop) {
  const std::size_t n = p.size();
  if (prefix.size() == n) {
    if (!visit(prefix)) stop = true;
    return;
  }
  for (ElementId x = 0; x < n && !stop; ++x) {
    if (placed[x] || pending[x] != 0) continue;
    placed[x] = true;
    prefix.push_back(x);
    p.above(x).for_each([&](ElementId y) { --pending[y]; });
    Backtrack(p, pending, placed, prefix, visit, stop);
    p.above(x).for_each([&](ElementId y) { ++pending[y]; });
    prefix.pop_back();
    placed[x] = false;
  }
}

std::vector<LinearOrder> Enumerate(const Poset& p, std::size_t cap) {
  std::vector<LinearOrder> out;
  bool over = false;
  ForEachLinearExtension(p, [&](std::span<const ElementId> seq) {
    if (out.size() == cap) {
      over = true;
      return false;
    }
    out.emplace_back(std::vector<ElementId>(seq.begin(), seq.end()));
    return true;
  });
  if (over) {
    Fail(ErrorCode::kCapExceeded,
         "more than " + std::to_string(cap) + " linear extensions");
  }
  return out;
}

std::size_t CountExtensions(const Poset& p, std::size_t cap) {
  std::size_t count = 0;
  ForEachLinearExtension(p, [&](std::span<const ElementId>) {
    return ++count <= cap;
  });
  if (count > cap) {
    Fail(ErrorCode::kCapExceeded,
         "more than " + std::to_string(cap) + " linear extensions");
  }
  return count;
}

void BreadthFirst(const Poset& p, const std::vector<LinearOrder>& exts,
                  const DiameterOptions& options, DiameterResult& result) {
  const std::size_t count = exts.size();
  const std::size_t n = p.size();
  std::map<std::vector<ElementId>, std::size_t> id;
  for (std::size_t v = 0; v < count; ++v) id.emplace(exts[v].sequence(), v);

  std::vector<std::vector<std::size_t>> adjacent(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::vector<ElementId> seq = exts[v].sequence();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (p.less(seq[i], seq[i + 1])) continue;
      std::swap(seq[i], seq[i + 1]);
      adjacent[v].push_back(id.at(seq));
      std::swap(seq[i], seq[i + 1]);
    }
  }

  std::vector<std::vector<std::size_t>> dist(count);
  std::size_t diameter = 0;
  for (std::size_t source = 0; source < count; ++source) {
    auto& d = dist[source];
    d.assign(count, SIZE_MAX);
    d[source] = 0;
    std::deque<std::size_t> queue{source};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adjacent[v]) {
        if (d[w] != SIZE_MAX) continue;
        d[w] = d[v] + 1;
        queue.push_back(w);
      }
    }
    for (std::size_t v = 0; v < count; ++v) {
      if (d[v] == SIZE_MAX) Fail(ErrorCode::kInternal, "G(P) is disconnected");
      diameter = std::max(diameter, d[v]);
    }
  }

  // Graph distance and reversal count are the same quantity.
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (dist[u][v] != CountReversals(exts[u], exts[v])) {
        Fail(ErrorCode::kInternal, "BFS distance disagrees with reversal count");
      }
      if (options.collect_pairs && dist[u][v] == diameter && diameter > 0) {
        if (result.pairs.size() == options.pair_limit) {
          result.census_complete = false;
        } else {
          result.pairs.emplace_back(exts[u], exts[v]);
        }
      }
    }
  }
  result.diameter = diameter;
  result.method = DiameterMethod::kBreadthFirst;
}

// Streams the extensions again instead of holding them; the lattice cases
// this route exists for have millions of extensions.
void DownsetProgram(const Poset& p, const DiameterOptions& options,
                    DiameterResult& result) {
  const std::size_t n = p.size();
  if (n > 63) {
    Fail(ErrorCode::kCapExceeded, "downset program needs at most 63 elements");
  }
  std::vector<std::uint64_t> below(n);
  for (ElementId x = 0; x < n; ++x) {
    p.below(x).for_each([&](ElementId y) { below[x] |= std::uint64_t{1} << y; });
  }
  std::vector<std::uint64_t> downsets;
  for (const ElementSet& s : EnumerateDownsets(p, options.cap)) {
    std::uint64_t mask = 0;
    s.for_each([&](ElementId y) { mask |= std::uint64_t{1} << y; });
    downsets.push_back(mask);
  }
  std::stable_sort(downsets.begin(), downsets.end(), [](auto a, auto b) {
    return std::popcount(a) < std::popcount(b);
  });
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < downsets.size(); ++i) index.emplace(downsets[i], i);
  const std::uint64_t full = downsets.back();

  // extend[i] lists (z, index of downsets[i] + z).
  std::vector<std::vector<std::pair<ElementId, std::size_t>>> extend(downsets.size());
  for (std::size_t i = 0; i < downsets.size(); ++i) {
    for (ElementId z = 0; z < n; ++z) {
      const std::uint64_t bit = std::uint64_t{1} << z;
      if ((downsets[i] & bit) || (below[z] & ~downsets[i])) continue;
      extend[i].emplace_back(z, index.at(downsets[i] | bit));
    }
  }

  std::vector<std::int64_t> best(downsets.size());
  std::vector<std::uint64_t> after(n);
  auto run = [&](const LinearOrder& second) {
    std::uint64_t later = 0;
    for (std::size_t pos = n; pos-- > 0;) {
      after[second.at(pos)] = later;
      later |= std::uint64_t{1} << second.at(pos);
    }
    std::fill(best.begin(), best.end(), -1);
    best[0] = 0;
    for (std::size_t i = 0; i < downsets.size(); ++i) {
      for (auto [z, j] : extend[i]) {
        std::int64_t value = best[i] + std::popcount(downsets[i] & after[z]);
        best[j] = std::max(best[j], value);
      }
    }
    return best[index.at(full)];
  };

  std::int64_t diameter = 0;
  std::vector<LinearOrder> witnesses;
  ForEachLinearExtension(p, [&](std::span<const ElementId> seq) {
    LinearOrder second(std::vector<ElementId>(seq.begin(), seq.end()));
    std::int64_t value = run(second);
    if (value > diameter) {
      diameter = value;
      witnesses.clear();
    }
    if (value == diameter) witnesses.push_back(std::move(second));
    return true;
  });
  result.diameter = diameter;
  result.method = DiameterMethod::kDownsetProgram;
  if (!options.collect_pairs || diameter == 0) return;

  // Walk every optimal path back from the full downset.
  std::set<std::pair<std::vector<ElementId>, std::vector<ElementId>>> found;
  std::vector<ElementId> suffix;
  for (const LinearOrder& second : witnesses) {
    if (!result.census_complete) break;
    run(second);
    std::function<void(std::size_t)> walk = [&](std::size_t j) {
      if (!result.census_complete) return;
      if (j == 0) {
        std::vector<ElementId> seq(suffix.rbegin(), suffix.rend());
        std::vector<ElementId> other = second.sequence();
        if (seq > other) std::swap(seq, other);
        found.emplace(std::move(seq), std::move(other));
        if (found.size() > options.pair_limit) result.census_complete = false;
        return;
      }
      const std::uint64_t top = downsets[j];
      for (ElementId z = 0; z < n; ++z) {
        const std::uint64_t bit = std::uint64_t{1} << z;
        if (!(top & bit)) continue;
        auto it = index.find(top & ~bit);
        if (it == index.end()) continue;
        const std::size_t i = it->second;
        if (best[i] < 0 ||
            best[i] + std::popcount(downsets[i] & after[z]) != best[j]) {
          continue;
        }
        suffix.push_back(z);
        walk(i);
        suffix.pop_back();
      }
    };
    walk(index.at(full));
  }
  for (const auto& [a, b] : found) {
    if (result.pairs.size() == options.pair_limit) break;
    result.pairs.emplace_back(LinearOrder(a), LinearOrder(b));
  }
}

}  // namespace

void ForEachLinearExtension(
    const Poset& p,
    const std::function<bool(std::span<const ElementId>)>& visit) {
  const std::size_t n = p.size();
  std::vector<std::size_t> pending(n);
  for (ElementId x = 0; x < n; ++x) pending[x] = p.below(x).count();
  std::vector<bool> placed(n, false);
  std::vector<ElementId> prefix;
  prefix.reserve(n);
  bool stop = false;
  Backtrack(p, pending, placed, prefix, visit, stop);
}

std::vector<LinearOrder> AllLinearExtensions(const Poset& p, std::size_t cap) {
  return Enumerate(p, cap);
}

std::uint64_t CountReversals(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size()) {
    Fail(ErrorCode::kMismatchedGroundSets, "orders have different sizes");
  }
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (b.position(a.at(i)) > b.position(a.at(j))) ++count;
    }
  }
  return count;
}

DiameterResult LinearExtensionGraphDiameter(const Poset& p,
                                            const DiameterOptions& options) {
  DiameterResult result;
  result.extension_count = CountExtensions(p, options.cap);
  if (result.extension_count <= options.bfs_limit) {
    BreadthFirst(p, Enumerate(p, options.cap), options, result);
  } else {
    DownsetProgram(p, options, result);
  }
  return result;
}

LatticeDiameterResult BruteLedDownset(const Poset& p,
                                      const DiameterOptions& options,
                                      std::size_t lattice_cap) {
  const DownsetLattice lattice = BuildDownsetLattice(p, lattice_cap);
  const DiameterResult graph = LinearExtensionGraphDiameter(lattice.order, options);
  LatticeDiameterResult out;
  out.led = graph.diameter;
  out.lattice_size = lattice.downsets.size();
  out.extension_count = graph.extension_count;
  out.method = graph.method;
  out.census_complete = graph.census_complete;
  auto lift = [&](const LinearOrder& order) {
    std::vector<ElementSet> seq;
    seq.reserve(order.size());
    for (ElementId v : order.sequence()) seq.push_back(lattice.downsets[v]);
    return LatticeExtension(std::move(seq));
  };
  for (const auto& [a, b] : graph.pairs) out.pairs.emplace_back(lift(a), lift(b));
  return out;
}

std::vector<EquivalenceClass> EnumerateClasses(const Poset& p, std::size_t cap) {
  const std::vector<ElementSet> antichains = EnumerateAntichains(p, cap);
  using Pair = std::pair<ElementSet, ElementSet>;
  std::map<Pair, std::set<Pair>> grouped;
  for (const ElementSet& a : antichains) {
    for (const ElementSet& b : antichains) {
      grouped[{a ^ b, a & b}].insert({a, b});
    }
  }

  std::vector<EquivalenceClass> out;
  out.reserve(grouped.size());
  for (const auto& [key, members] : grouped) {
    EquivalenceClass c{key.first, key.second, {}, {}, {}};
    const InducedPoset sub = Induced(p, c.d);
    std::vector<ElementSet> blocks;
    for (const auto& comp : Components(sub.poset)) {
      std::vector<ElementId> original;
      ElementSet block(p.size());
      for (ElementId local : comp) {
        original.push_back(sub.original[local]);
        block.set(sub.original[local]);
      }
      std::sort(original.begin(), original.end());
      c.components.push_back(std::move(original));
      blocks.push_back(std::move(block));
    }
    const std::size_t d = c.components.size();
    if (d >= 63) Fail(ErrorCode::kInternal, "too many components");
    std::set<Pair> generated;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      ElementSet x(p.size());
      for (std::size_t k = 0; k < d; ++k) {
        if (mask >> k & 1) {
          x |= MaxOf(p, blocks[k]);
        } else if (blocks[k].count() > 1) {
          x |= MinOf(p, blocks[k]);
        }
      }
      ElementSet a = c.i | x;
      ElementSet b = c.i | (c.d - x);
      generated.insert({a, b});
      c.downset_pairs.emplace_back(DownsetOf(p, a), DownsetOf(p, b));
      c.pairs.emplace_back(std::move(a), std::move(b));
    }
    if (generated != members || generated.size() != c.pairs.size()) {
      Fail(ErrorCode::kInternal, "class does not match its component subsets");
    }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::size_t RequirePosition(const LatticeExtension& ext, const ElementSet& s) {
  auto pos = ext.position(s);
  if (!pos) {
    Fail(ErrorCode::kMismatchedGroundSets, "downset missing from extension");
  }
  return *pos;
}

void RequireSameGround(const LatticeExtension& first,
                       const LatticeExtension& second) {
  if (!first.SameGroundSet(second)) {
    Fail(ErrorCode::kMismatchedGroundSets, "extensions order different sets");
  }
}

std::vector<bool> Family(const EquivalenceClass& c, const LatticeExtension& ext) {
  std::vector<bool> family(c.pairs.size());
  for (std::size_t k = 0; k < c.pairs.size(); ++k) {
    const auto& [up, down] = c.downset_pairs[k];
    family[k] = RequirePosition(ext, up) < RequirePosition(ext, down);
  }
  return family;
}

bool ClosedDownwards(const std::vector<bool>& family) {
  for (std::size_t k = 0; k < family.size(); ++k) {
    if (!family[k]) continue;
    for (std::size_t bit = 1; bit <= k; bit <<= 1) {
      if ((k & bit) && !family[k & ~bit]) return false;
    }
  }
  return true;
}

}  // namespace

BigCount ClassReversals(const EquivalenceClass& c, const LatticeExtension& first,
                        const LatticeExtension& second) {
  RequireSameGround(first, second);
  // K and its complement name the same unordered pair.
  std::size_t ordered = 0;
  for (const auto& [u, v] : c.downset_pairs) {
    const bool before_first = RequirePosition(first, u) < RequirePosition(first, v);
    const bool before_second = RequirePosition(second, u) < RequirePosition(second, v);
    if (u != v && before_first != before_second) ++ordered;
  }
  return BigCount(ordered / 2);
}

KleitmanAudit KleitmanFamilies(const EquivalenceClass& c,
                               const LatticeExtension& first,
                               const LatticeExtension& second) {
  RequireSameGround(first, second);
  KleitmanAudit audit;
  audit.first = Family(c, first);
  audit.second = Family(c, second);
  for (std::size_t k = 0; k < audit.first.size(); ++k) {
    audit.first_size += audit.first[k];
    audit.second_size += audit.second[k];
    audit.intersection_size += audit.first[k] && audit.second[k];
    audit.symmetric_difference_size += audit.first[k] != audit.second[k];
  }
  audit.first_closed_downwards = ClosedDownwards(audit.first);
  audit.second_closed_downwards = ClosedDownwards(audit.second);
  audit.inequality_holds = BigCount(audit.first_size) * audit.second_size <=
                           BigCount(c.pairs.size()) * audit.intersection_size;
  return audit;
}

std::vector<CriticalPair> CriticalPairs(const Poset& p) {
  std::vector<CriticalPair> out;
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y = 0; y < p.size(); ++y) {
      if (!p.incomparable(x, y)) continue;
      if (p.below(x).is_subset_of(p.below(y)) && p.above(y).is_subset_of(p.above(x))) {
        out.push_back({x, y});
      }
    }
  }
  return out;
}

bool IsDiametrallyReversing(const Poset& p, const DiameterOptions& options) {
  DiameterOptions opts = options;
  opts.collect_pairs = true;
  const DiameterResult result = LinearExtensionGraphDiameter(p, opts);
  if (!result.census_complete) {
    Fail(ErrorCode::kCapExceeded, "diametral census was truncated");
  }
  const std::vector<CriticalPair> critical = CriticalPairs(p);
  auto reverses_one = [&](const LinearOrder& order) {
    return std::any_of(critical.begin(), critical.end(), [&](const CriticalPair& c) {
      return order.before(c.y, c.x);
    });
  };
  for (const auto& [a, b] : result.pairs) {
    if (!reverses_one(a) || !reverses_one(b)) return false;
  }
  return true;
}

}  // namespace posetkit
