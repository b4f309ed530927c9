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

#include "posetkit/posetkit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "posetkit/error.hpp"
#include "posetkit/led.hpp"
#include "posetkit/oracle.hpp"
#include "posetkit/poset.hpp"
#include "posetkit/poset_io.hpp"
#include "posetkit/realizer.hpp"
#include "posetkit/revlex.hpp"

#ifndef POSETKIT_VERSION_STRING
#define POSETKIT_VERSION_STRING "0.0.0"
#endif

struct pk_poset {
  posetkit::Poset poset;
};

struct pk_diametral {
  posetkit::Poset poset;
  posetkit::DiametralPair pair;
};

struct pk_diameter {
  posetkit::DiameterResult result;
  std::size_t order_size = 0;
};

struct pk_class_list {
  std::vector<posetkit::EquivalenceClass> classes;
};

namespace {

thread_local std::string last_error;

pk_status StatusOf(posetkit::ErrorCode code) {
  using posetkit::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return PK_ERR_PARSE;
    case ErrorCode::kIndexOutOfRange:
      return PK_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kCycleDetected:
      return PK_ERR_CYCLE;
    case ErrorCode::kNotTwoDimensional:
      return PK_ERR_NOT_TWO_DIMENSIONAL;
    case ErrorCode::kCapExceeded:
      return PK_ERR_CAP_EXCEEDED;
    case ErrorCode::kInternal:
      return PK_ERR_INTERNAL;
    default:
      return PK_ERR_INVALID_ARGUMENT;
  }
}

template <typename F>
pk_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return PK_OK;
  } catch (const posetkit::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PK_ERR_INTERNAL;
  }
}

void Require(bool ok, const char* what) {
  if (!ok) posetkit::Fail(posetkit::ErrorCode::kInvalidArgument, what);
}

char* Duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string SetName(const posetkit::ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](posetkit::ElementId x) {
    if (!first) out += ',';
    out += std::to_string(x + 1);
    first = false;
  });
  return out + "}";
}

void CopyMembers(const posetkit::ElementSet& s, std::size_t* members,
                 std::size_t* count) {
  std::size_t k = 0;
  s.for_each([&](posetkit::ElementId x) {
    if (members != nullptr) members[k] = x;
    ++k;
  });
  if (count != nullptr) *count = k;
}

void CopyOrder(const posetkit::LinearOrder& order, std::size_t* out) {
  for (std::size_t i = 0; i < order.size(); ++i) out[i] = order.at(i);
}

}  // namespace

extern "C" {

const char* pk_version(void) { return POSETKIT_VERSION_STRING; }

const char* pk_status_name(pk_status status) {
  switch (status) {
    case PK_OK:
      return "ok";
    case PK_ERR_PARSE:
      return "parse error";
    case PK_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PK_ERR_INDEX_OUT_OF_RANGE:
      return "index out of range";
    case PK_ERR_CYCLE:
      return "cycle detected";
    case PK_ERR_NOT_TWO_DIMENSIONAL:
      return "not two-dimensional";
    case PK_ERR_CAP_EXCEEDED:
      return "cap exceeded";
    case PK_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* pk_last_error(void) { return last_error.c_str(); }

void pk_string_free(char* s) { std::free(s); }

pk_status pk_poset_parse(const char* text, pk_poset** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new pk_poset{posetkit::ParsePoset(text)};
  });
}

pk_status pk_poset_from_relations(size_t n, const size_t* pairs,
                                  size_t relation_count, pk_poset** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    Require(pairs != nullptr || relation_count == 0, "null relations");
    std::vector<posetkit::Relation> relations;
    for (std::size_t r = 0; r < relation_count; ++r) {
      relations.emplace_back(pairs[2 * r], pairs[2 * r + 1]);
    }
    *out = new pk_poset{posetkit::Poset::FromRelations(n, relations)};
  });
}

pk_status pk_poset_antichain(size_t n, pk_poset** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = new pk_poset{posetkit::AntichainPoset(n)};
  });
}

pk_status pk_poset_chain_union(const size_t* lengths, size_t count,
                               pk_poset** out) {
  return Guard([&] {
    Require(out != nullptr && (lengths != nullptr || count == 0), "null argument");
    *out = new pk_poset{posetkit::ChainUnion({lengths, count})};
  });
}

void pk_poset_free(pk_poset* p) { delete p; }

size_t pk_poset_size(const pk_poset* p) { return p ? p->poset.size() : 0; }

pk_status pk_poset_less(const pk_poset* p, size_t x, size_t y, int* out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    if (x >= p->poset.size() || y >= p->poset.size()) {
      posetkit::Fail(posetkit::ErrorCode::kIndexOutOfRange, "element out of range");
    }
    *out = p->poset.less(x, y) ? 1 : 0;
  });
}

size_t pk_poset_incomparable_count(const pk_poset* p) {
  return p ? posetkit::IncomparableCount(p->poset) : 0;
}

int pk_poset_is_two_dimensional(const pk_poset* p) {
  return p && posetkit::IsTwoDimensional(p->poset) ? 1 : 0;
}

pk_status pk_poset_label(const pk_poset* p, size_t x, char** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    if (x >= p->poset.size()) {
      posetkit::Fail(posetkit::ErrorCode::kIndexOutOfRange, "element out of range");
    }
    const auto& labels = p->poset.labels();
    *out = Duplicate(labels.empty() ? std::to_string(x + 1) : labels[x]);
  });
}

pk_status pk_poset_lattice(const pk_poset* p, size_t cap, pk_poset** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    posetkit::DownsetLattice lattice = posetkit::BuildDownsetLattice(p->poset, cap);
    std::vector<std::string> labels;
    for (const auto& s : lattice.downsets) labels.push_back(SetName(s));
    lattice.order.set_labels(std::move(labels));
    *out = new pk_poset{std::move(lattice.order)};
  });
}

pk_status pk_realizer(const pk_poset* p, size_t* sigma, size_t* sigma_bar) {
  return Guard([&] {
    Require(p != nullptr && sigma != nullptr && sigma_bar != nullptr,
            "null argument");
    const posetkit::Realizer2D r = posetkit::Realizer(p->poset);
    CopyOrder(r.sigma, sigma);
    CopyOrder(r.sigma_bar, sigma_bar);
  });
}

pk_status pk_led_boolean(unsigned n, char** out) {
  return Guard([&] {
    Require(out != nullptr, "null argument");
    *out = Duplicate(posetkit::ToDecimal(posetkit::LedBoolean(n)));
  });
}

pk_status pk_led_chain_union(const size_t* lengths, size_t count, char** out) {
  return Guard([&] {
    Require(out != nullptr && (lengths != nullptr || count == 0), "null argument");
    *out = Duplicate(posetkit::ToDecimal(posetkit::LedChainUnion({lengths, count})));
  });
}

pk_status pk_count_antichains(const pk_poset* p, char** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = Duplicate(posetkit::ToDecimal(posetkit::CountAntichains(p->poset)));
  });
}

pk_status pk_led_downset(const pk_poset* p, pk_led_breakdown* out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    const posetkit::LedBreakdown b = posetkit::LedDownset(p->poset);
    pk_led_breakdown filled{};
    try {
      filled.alpha = Duplicate(posetkit::ToDecimal(b.alpha));
      filled.beta = Duplicate(posetkit::ToDecimal(b.beta));
      filled.gamma = Duplicate(posetkit::ToDecimal(b.gamma));
      filled.delta = Duplicate(posetkit::ToDecimal(b.delta));
      filled.led = Duplicate(posetkit::ToDecimal(b.led));
    } catch (...) {
      pk_led_breakdown_clear(&filled);
      throw;
    }
    *out = filled;
  });
}

void pk_led_breakdown_clear(pk_led_breakdown* b) {
  if (b == nullptr) return;
  for (char** field : {&b->alpha, &b->beta, &b->gamma, &b->delta, &b->led}) {
    std::free(*field);
    *field = nullptr;
  }
}

pk_status pk_led_upper_bound(const pk_poset* p, size_t cap, char** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = Duplicate(posetkit::ToDecimal(posetkit::LedUpperBound(p->poset, cap)));
  });
}

pk_status pk_diametral_build(const pk_poset* p, size_t cap, pk_diametral** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = new pk_diametral{p->poset, posetkit::BuildDiametralPair(p->poset, cap)};
  });
}

void pk_diametral_free(pk_diametral* d) { delete d; }

size_t pk_diametral_lattice_size(const pk_diametral* d) {
  return d ? d->pair.first.size() : 0;
}

pk_status pk_diametral_downset(const pk_diametral* d, int which, size_t position,
                               size_t* members, size_t* count) {
  return Guard([&] {
    Require(d != nullptr && members != nullptr && count != nullptr,
            "null argument");
    Require(which == 0 || which == 1, "which must be 0 or 1");
    const auto& ext = which == 0 ? d->pair.first : d->pair.second;
    if (position >= ext.size()) {
      posetkit::Fail(posetkit::ErrorCode::kIndexOutOfRange,
                     "lattice position out of range");
    }
    CopyMembers(ext.at(position), members, count);
  });
}

pk_status pk_diametral_sigma(const pk_diametral* d, size_t* sigma) {
  return Guard([&] {
    Require(d != nullptr && sigma != nullptr, "null argument");
    CopyOrder(d->pair.realizer.sigma, sigma);
  });
}

pk_status pk_diametral_distance(const pk_diametral* d, char** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    *out = Duplicate(posetkit::ToDecimal(
        posetkit::ReversalDistance(d->pair.first, d->pair.second)));
  });
}

pk_status pk_diametral_svg(const pk_diametral* d, unsigned scale, char** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    Require(scale > 0, "scale must be positive");
    *out = Duplicate(posetkit::RenderDominanceSvg(d->poset, d->pair.first,
                                                  d->pair.second, scale));
  });
}

pk_status pk_oracle_diameter(const pk_poset* p, size_t cap, pk_diameter** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    posetkit::DiameterOptions options;
    options.cap = cap;
    *out = new pk_diameter{posetkit::LinearExtensionGraphDiameter(p->poset, options),
                           p->poset.size()};
  });
}

void pk_diameter_free(pk_diameter* d) { delete d; }

pk_status pk_diameter_value(const pk_diameter* d, char** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "null argument");
    *out = Duplicate(posetkit::ToDecimal(d->result.diameter));
  });
}

size_t pk_diameter_extension_count(const pk_diameter* d) {
  return d ? d->result.extension_count : 0;
}

size_t pk_diameter_order_size(const pk_diameter* d) {
  return d ? d->order_size : 0;
}

size_t pk_diameter_pair_count(const pk_diameter* d) {
  return d ? d->result.pairs.size() : 0;
}

int pk_diameter_census_complete(const pk_diameter* d) {
  return d && d->result.census_complete ? 1 : 0;
}

pk_status pk_diameter_pair(const pk_diameter* d, size_t index, size_t* first,
                           size_t* second) {
  return Guard([&] {
    Require(d != nullptr && first != nullptr && second != nullptr,
            "null argument");
    if (index >= d->result.pairs.size()) {
      posetkit::Fail(posetkit::ErrorCode::kIndexOutOfRange, "pair out of range");
    }
    CopyOrder(d->result.pairs[index].first, first);
    CopyOrder(d->result.pairs[index].second, second);
  });
}

pk_status pk_oracle_classes(const pk_poset* p, size_t cap, pk_class_list** out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    *out = new pk_class_list{posetkit::EnumerateClasses(p->poset, cap)};
  });
}

void pk_class_list_free(pk_class_list* c) { delete c; }

size_t pk_class_list_size(const pk_class_list* c) {
  return c ? c->classes.size() : 0;
}

pk_status pk_class_info(const pk_class_list* c, size_t index, size_t* d_members,
                        size_t* d_size, size_t* i_members, size_t* i_size,
                        size_t* components, size_t* pair_count) {
  return Guard([&] {
    Require(c != nullptr, "null argument");
    if (index >= c->classes.size()) {
      posetkit::Fail(posetkit::ErrorCode::kIndexOutOfRange, "class out of range");
    }
    const posetkit::EquivalenceClass& cls = c->classes[index];
    CopyMembers(cls.d, d_members, d_size);
    CopyMembers(cls.i, i_members, i_size);
    if (components != nullptr) *components = cls.component_count();
    if (pair_count != nullptr) *pair_count = cls.pairs.size();
  });
}

pk_status pk_oracle_critical_pairs(const pk_poset* p, size_t* pairs,
                                   size_t capacity, size_t* count) {
  return Guard([&] {
    Require(p != nullptr && count != nullptr, "null argument");
    Require(pairs != nullptr || capacity == 0, "null pair buffer");
    const auto critical = posetkit::CriticalPairs(p->poset);
    for (std::size_t k = 0; k < critical.size() && k < capacity; ++k) {
      pairs[2 * k] = critical[k].x;
      pairs[2 * k + 1] = critical[k].y;
    }
    *count = critical.size();
  });
}

pk_status pk_oracle_diametrally_reversing(const pk_poset* p, size_t cap,
                                          int* out) {
  return Guard([&] {
    Require(p != nullptr && out != nullptr, "null argument");
    posetkit::DiameterOptions options;
    options.cap = cap;
    *out = posetkit::IsDiametrallyReversing(p->poset, options) ? 1 : 0;
  });
}

}  // extern "C"
