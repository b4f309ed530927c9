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

#include "posetkit/revlex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "posetkit/error.hpp"

namespace posetkit {

bool RevlexLess(const LinearOrder& sigma, const ElementSet& s,
                const ElementSet& t) {
  if (s == t) Fail(ErrorCode::kEqualSets, "revlex comparison of equal sets");
  const ElementSet diff = s ^ t;
  ElementId best = 0;
  std::size_t best_position = 0;
  bool found = false;
  diff.for_each([&](ElementId x) {
    if (!found || sigma.position(x) > best_position) {
      best = x;
      best_position = sigma.position(x);
      found = true;
    }
  });
  return t.test(best);
}

LatticeExtension::LatticeExtension(std::vector<ElementSet> order)
    : order_(std::move(order)) {
  position_.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (!position_.emplace(order_[i], i).second) {
      Fail(ErrorCode::kInvalidArgument, "lattice extension repeats a downset");
    }
  }
}

std::optional<std::size_t> LatticeExtension::position(const ElementSet& s) const {
  auto it = position_.find(s);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

bool LatticeExtension::SameGroundSet(const LatticeExtension& other) const {
  if (size() != other.size()) return false;
  for (const auto& s : other.order_) {
    if (!position_.contains(s)) return false;
  }
  return true;
}

bool IsDownsetLatticeExtension(const Poset& p, const LatticeExtension& ext,
                               std::size_t cap) {
  const auto downsets = EnumerateDownsets(p, cap);
  if (downsets.size() != ext.size()) return false;
  for (const auto& d : downsets) {
    auto pos = ext.position(d);
    if (!pos) return false;
    // Inclusion is generated by the covers D - {x} < D, x maximal in D.
    bool ok = true;
    MaxOf(p, d).for_each([&](ElementId x) {
      ElementSet lower = d;
      lower.reset(x);
      auto lower_pos = ext.position(lower);
      if (!lower_pos || *lower_pos >= *pos) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

LatticeExtension BuildRevlexExtension(const Poset& p, const LinearOrder& sigma,
                                      std::size_t cap) {
  if (!IsLinearExtension(p, sigma)) {
    Fail(ErrorCode::kNotALinearExtension, "sigma is not a linear extension");
  }
  auto downsets = EnumerateDownsets(p, cap);
  // Re-indexing each set by sigma position turns the revlex order into
  // numeric order of the re-indexed bit patterns.
  std::vector<ElementSet> keys;
  keys.reserve(downsets.size());
  for (const auto& d : downsets) {
    ElementSet key(p.size());
    d.for_each([&](ElementId x) { key.set(sigma.position(x)); });
    keys.push_back(std::move(key));
  }
  std::vector<std::size_t> idx(downsets.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<ElementSet> order;
  order.reserve(idx.size());
  for (std::size_t i : idx) order.push_back(std::move(downsets[i]));
  return LatticeExtension(std::move(order));
}

namespace {

std::uint64_t CountInversions(std::vector<std::size_t>& a,
                              std::vector<std::size_t>& scratch,
                              std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t total = CountInversions(a, scratch, lo, mid) +
                        CountInversions(a, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[j] < a[i]) {
      total += mid - i;
      scratch[k++] = a[j++];
    } else {
      scratch[k++] = a[i++];
    }
  }
  while (i < mid) scratch[k++] = a[i++];
  while (j < hi) scratch[k++] = a[j++];
  std::copy(scratch.begin() + lo, scratch.begin() + hi, a.begin() + lo);
  return total;
}

void RequireSameGroundSet(const LatticeExtension& a, const LatticeExtension& b) {
  if (!a.SameGroundSet(b)) {
    Fail(ErrorCode::kMismatchedGroundSets,
         "lattice extensions are over different downset families");
  }
}

}  // namespace

BigCount ReversalDistance(const LatticeExtension& first,
                          const LatticeExtension& second) {
  RequireSameGroundSet(first, second);
  std::vector<std::size_t> seq(second.size());
  for (std::size_t i = 0; i < second.size(); ++i) {
    seq[i] = *first.position(second.at(i));
  }
  std::vector<std::size_t> scratch(seq.size());
  return BigCount(CountInversions(seq, scratch, 0, seq.size()));
}

DiametralPair BuildDiametralPair(const Poset& p, std::size_t cap) {
  DiametralPair out;
  out.realizer = Realizer(p);
  out.first = BuildRevlexExtension(p, out.realizer.sigma, cap);
  out.second = BuildRevlexExtension(p, out.realizer.sigma_bar, cap);
  return out;
}

std::vector<DominancePoint> DominanceCoordinates(const LatticeExtension& first,
                                                 const LatticeExtension& second) {
  RequireSameGroundSet(first, second);
  std::vector<DominancePoint> out;
  out.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    out.push_back({first.at(i), i + 1, *second.position(first.at(i)) + 1});
  }
  return out;
}

namespace {

std::string SetLabel(const ElementSet& s) {
  std::string out = "{";
  bool sep = false;
  s.for_each([&](ElementId x) {
    if (sep) out += ",";
    out += std::to_string(x + 1);
    sep = true;
  });
  return out + "}";
}

}  // namespace

std::string RenderDominanceSvg(const Poset& p, const LatticeExtension& first,
                               const LatticeExtension& second, double scale) {
  const auto points = DominanceCoordinates(first, second);
  const std::size_t extent = points.size() + 1;
  std::ostringstream px;
  px << static_cast<double>(extent) * scale;
  const std::string size = px.str();

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
      << "\">\n"
      << "<g transform=\"translate(0," << size << ") scale(" << scale << ','
      << -scale << ")\">\n"
      << "<g stroke=\"#555555\" stroke-width=\"0.06\">\n";
  for (const auto& pt : points) {
    MaxOf(p, pt.downset).for_each([&](ElementId x) {
      ElementSet lower = pt.downset;
      lower.reset(x);
      const std::size_t lx = *first.position(lower) + 1;
      const std::size_t ly = *second.position(lower) + 1;
      svg << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << pt.x
          << "\" y2=\"" << pt.y << "\"/>\n";
    });
  }
  svg << "</g>\n<g fill=\"#1f4e9c\">\n";
  for (const auto& pt : points) {
    svg << "<circle cx=\"" << pt.x << "\" cy=\"" << pt.y
        << "\" r=\"0.2\"><title>" << SetLabel(pt.downset)
        << "</title></circle>\n";
  }
  svg << "</g>\n</g>\n</svg>\n";
  return svg.str();
}

}  // namespace posetkit
